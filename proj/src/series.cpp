#include "acplus/series.hpp"

#include <algorithm>
#include <cmath>

#include "acplus/errors.hpp"

namespace acp {

Series::Series(std::map<index_t, cplx> coeffs, index_t truncation, TailInfo tail)
    : coeffs_(std::move(coeffs)), truncation_(truncation), tail_(tail) {
  require_pre(truncation_ >= 1, "series truncation index must be >= 1");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    require_pre(it->first >= 1 && it->first <= truncation_,
                "series coefficient index outside [1, truncation]");
    if (it->second == cplx(0.0, 0.0))
      it = coeffs_.erase(it);
    else
      ++it;
  }
  if (tail_.kind == TailKind::exact_polynomial) {
    tail_.majorant = 0.0;
    tail_.valid_from = 0.0;
  } else {
    require_pre(tail_.majorant >= 0.0, "tail majorant must be >= 0");
  }
}

Series Series::zero(index_t truncation) { return Series({}, truncation); }

Series Series::constant(cplx a, index_t truncation) {
  return Series({{1, a}}, truncation);
}

Series Series::monomial(index_t n, cplx a) {
  require_pre(n >= 1, "monomial index must be >= 1");
  return Series({{n, a}}, n);
}

cplx Series::coefficient(index_t n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
}

double Series::l1_norm(bool include_constant) const {
  KahanSum acc;
  for (const auto& [n, a] : coeffs_) {
    if (!include_constant && n == 1) continue;
    acc.add(std::abs(a));
  }
  return acc.value();
}

double Series::derivative_l1() const {
  KahanSum acc;
  for (const auto& [n, a] : coeffs_) {
    if (n == 1) continue;
    acc.add(std::abs(a) * std::log(static_cast<double>(n)));
  }
  return acc.value();
}

EvaluationResult Series::evaluate(cplx s) const {
  KahanSumC acc;
  for (const auto& [n, a] : coeffs_) {
    if (n == 1) {
      acc.add(a);
      continue;
    }
    double ln = std::log(static_cast<double>(n));
    // n^{-s} = e^{-sigma ln n} (cos(t ln n) - i sin(t ln n))
    double mod = std::exp(-s.real() * ln);
    double ph = -s.imag() * ln;
    acc.add(a * cplx(mod * std::cos(ph), mod * std::sin(ph)));
  }
  EvaluationResult r{acc.value(), std::nullopt};
  if (tail_.kind == TailKind::truncated_with_bound &&
      s.real() >= tail_.valid_from)
    r.tail_bound = tail_.majorant;
  return r;
}

Series& Series::scale(cplx factor) {
  if (factor == cplx(0.0, 0.0)) {
    coeffs_.clear();
    tail_.majorant = 0.0;
    return *this;
  }
  for (auto& [n, a] : coeffs_) a *= factor;
  tail_.majorant *= std::abs(factor);
  return *this;
}

Series Series::dilate(index_t m, index_t cap) const {
  require_pre(m >= 1, "dilation factor must be >= 1");
  require_pre(cap >= 1, "dilation cap must be >= 1");
  std::map<index_t, cplx> out;
  double dropped = 0.0;
  for (const auto& [n, a] : coeffs_) {
    if (n > cap / m) {  // n*m > cap without overflow
      dropped += std::abs(a);
      continue;
    }
    out[n * m] = a;
  }
  TailInfo tail = tail_;
  if (dropped > 0.0 || tail_.kind == TailKind::truncated_with_bound) {
    tail.kind = TailKind::truncated_with_bound;
    // dropped coefficients a_n (now at index n*m) satisfy |a_n (nm)^{-s}| <=
    // |a_n| for Re s >= 0.
    tail.majorant = tail_.majorant + dropped;
    tail.valid_from = std::max(tail_.valid_from, 0.0);
  }
  return Series(std::move(out), cap, tail);
}

Series Series::translate(double h) const {
  std::map<index_t, cplx> out;
  for (const auto& [n, a] : coeffs_) {
    double ln = std::log(static_cast<double>(n));
    out[n] = a * std::exp(cplx(-h * ln, 0.0));
  }
  TailInfo tail = tail_;
  if (tail.kind == TailKind::truncated_with_bound) {
    // |tail(s + h)| <= majorant once Re(s+h) >= valid_from.
    tail.valid_from = tail_.valid_from - h;
  }
  return Series(std::move(out), truncation_, tail);
}

Series add(const Series& f, const Series& g) {
  const bool both_exact = f.exact() && g.exact();
  index_t cap = both_exact ? std::max(f.truncation_, g.truncation_)
                           : std::min(f.truncation_, g.truncation_);
  std::map<index_t, cplx> out;
  double dropped = 0.0;
  auto fold = [&](const Series& s) {
    for (const auto& [n, a] : s.coeffs_) {
      if (n > cap) {
        dropped += std::abs(a);
        continue;
      }
      out[n] += a;
    }
  };
  fold(f);
  fold(g);
  TailInfo tail;
  if (!both_exact) {
    tail.kind = TailKind::truncated_with_bound;
    tail.majorant = f.tail_.majorant + g.tail_.majorant + dropped;
    tail.valid_from = std::max({f.tail_.valid_from, g.tail_.valid_from, 0.0});
  }
  return Series(std::move(out), cap, tail);
}

Series multiply(const Series& f, const Series& g, bool product_closure) {
  const bool both_exact = f.exact() && g.exact();
  index_t cap;
  if (both_exact && product_closure) {
    require_pre(f.truncation_ <= (index_t{1} << 62) / std::max<index_t>(1, g.truncation_),
                "product closure overflows the index range");
    cap = f.truncation_ * g.truncation_;
  } else {
    cap = std::min(f.truncation_, g.truncation_);
  }
  std::map<index_t, cplx> out;
  double dropped = 0.0;
  for (const auto& [n1, a1] : f.coeffs_) {
    for (const auto& [n2, a2] : g.coeffs_) {
      if (n1 > cap / n2) {
        dropped += std::abs(a1) * std::abs(a2);
        continue;
      }
      out[n1 * n2] += a1 * a2;
    }
  }
  TailInfo tail;
  if (!(both_exact && dropped == 0.0)) {
    tail.kind = TailKind::truncated_with_bound;
    // |f*g - kept| <= dropped-cross-terms + ||f||_1 B_g + ||g||_1 B_f + B_f B_g
    // for Re s >= max(valid_from, 0).
    tail.majorant = dropped + f.l1_norm() * g.tail_.majorant +
                    g.l1_norm() * f.tail_.majorant +
                    f.tail_.majorant * g.tail_.majorant;
    tail.valid_from = std::max({f.tail_.valid_from, g.tail_.valid_from, 0.0});
  }
  return Series(std::move(out), cap, tail);
}

Series exp_series(const Series& f, index_t closure) {
  require_pre(f.coefficient(1) == cplx(0.0, 0.0),
              "exp_series requires a zero constant term");
  index_t cap = closure > 0 ? closure : f.truncation_;

  // g = exp(f) via the log-derivative recurrence
  //   g_1 = 1,  g_n = sum_{d | n, d > 1} (ln d / ln n) f_d g_{n/d},
  // walked over an ordered map so every g_m is final before it is consumed
  // (contributions to n = d*m only come from m < n).  Running the same
  // recurrence on |f| gives the kept l1 mass of exp(|f|), whose full mass is
  // exactly e^{||f||_1}; the difference is a sound bound on everything that
  // fell past the cap (valid for Re s >= 0).
  std::map<index_t, cplx> g{{1, cplx(1.0, 0.0)}};
  std::map<index_t, double> gabs{{1, 1.0}};
  for (auto it = g.begin(); it != g.end(); ++it) {
    const index_t m = it->first;
    const cplx gm = it->second;
    const double gam = gabs[m];
    for (const auto& [d, fd] : f.coeffs()) {
      if (d == 1) continue;
      if (d > cap / m) continue;
      const index_t n = d * m;
      const double w = std::log(static_cast<double>(d)) /
                       std::log(static_cast<double>(n));
      g[n] += w * fd * gm;
      gabs[n] += w * std::abs(fd) * gam;
    }
  }
  KahanSum kept;
  for (const auto& [n, v] : gabs) kept.add(v);
  double total = std::exp(f.l1_norm(false));
  double dropped = std::max(0.0, total - kept.value());

  TailInfo tail;
  if (dropped > 0.0 || !f.exact()) {
    tail.kind = TailKind::truncated_with_bound;
    // A truncated input hides coefficients beyond N_f; exp of the hidden part
    // multiplies the result by (1 + tail) with |tail| <= e^{B_f} - 1.
    double input_tail_factor = std::expm1(f.tail().majorant);
    tail.majorant = dropped + (kept.value() + dropped) * input_tail_factor;
    tail.valid_from = std::max(f.tail().valid_from, 0.0);
  }
  return Series(std::move(g), cap, tail);
}

double sup_norm_estimate(const Series& f, double sigma, double t_window,
                         double grid_step) {
  require_pre(t_window > 0.0 && grid_step > 0.0,
              "sup_norm_estimate needs positive window and step");
  const auto& cs = f.coeffs();
  const std::size_t k = cs.size();
  if (k == 0) return 0.0;

  std::vector<double> mod(k), ln(k);
  std::vector<cplx> av(k), rot(k), cur(k);
  {
    std::size_t i = 0;
    for (const auto& [n, a] : cs) {
      ln[i] = std::log(static_cast<double>(n));
      mod[i] = std::exp(-sigma * ln[i]);
      rot[i] = std::exp(cplx(0.0, -grid_step * ln[i]));
      av[i] = a;
      ++i;
    }
  }
  const auto steps = static_cast<std::int64_t>(std::floor(t_window / grid_step));
  double best = 0.0;
  // Scan t = -t_window ... +t_window by incremental rotors; re-anchor the
  // phases every 4096 steps to stop drift.
  const double t0 = -static_cast<double>(steps) * grid_step;
  std::int64_t total = 2 * steps + 1;
  for (std::int64_t j = 0; j < total; ++j) {
    if (j % 4096 == 0) {
      double t = t0 + static_cast<double>(j) * grid_step;
      for (std::size_t i = 0; i < k; ++i) cur[i] = std::polar(mod[i], -t * ln[i]);
    }
    KahanSumC acc;
    for (std::size_t i = 0; i < k; ++i) {
      acc.add(av[i] * cur[i]);
      cur[i] *= rot[i];
    }
    best = std::max(best, std::abs(acc.value()));
  }
  return best;
}

}  // namespace acp
