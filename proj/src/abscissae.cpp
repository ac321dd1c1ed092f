#include "acplus/abscissae.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace acp {

namespace {

struct Rung {
  double log_m;
  double growth;  // log of running-max partial sum at this rung
  double tail;    // log of |S(N) - S(M)|, NaN when not usable
};

double slope_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

// One abscissa from a ladder of (log M, log growth, log tail) samples:
// growing sums -> growth slope; stabilised sums with decaying tails -> tail
// slope (clamped non-positive); otherwise the boundary case 0.
double estimate_one(const std::vector<Rung>& rungs) {
  std::vector<double> xs, ys;
  const std::size_t use = std::min<std::size_t>(rungs.size(), 10);
  for (std::size_t i = rungs.size() - use; i < rungs.size(); ++i) {
    xs.push_back(rungs[i].log_m);
    ys.push_back(rungs[i].growth);
  }
  double g = slope_fit(xs, ys);
  if (g >= 0.1) return g;

  // Tail-decay regime: need positive, genuinely shrinking tails.
  std::vector<double> tx, ty;
  for (const auto& r : rungs) {
    if (std::isfinite(r.tail)) {
      tx.push_back(r.log_m);
      ty.push_back(r.tail);
    }
  }
  if (tx.size() >= 4 && ty.front() - ty.back() > std::log(4.0)) {
    double t = slope_fit(tx, ty);
    if (t < 0.0) return t;
  }
  return g;
}

}  // namespace

AbscissaeReport estimate_abscissae(const Series& f) {
  AbscissaeReport rep;
  rep.samples_used = f.support_size();
  if (f.exact() || f.support_size() < 32) {
    rep.polynomial_exact = true;
    return rep;  // all abscissae at the -inf sentinel
  }

  const index_t n_total = f.truncation();
  // Geometric rung ladder M_j = ceil(N^{1/8}) * 2^j, capped at N.
  std::vector<index_t> ladder;
  index_t m = std::max<index_t>(
      2, static_cast<index_t>(std::ceil(std::pow(static_cast<double>(n_total), 0.125))));
  while (m < n_total) {
    ladder.push_back(m);
    if (m > n_total / 2) break;
    m *= 2;
  }
  ladder.push_back(n_total);

  // Ascending pass: prefix sums at every support point (for tails), plus
  // running maxima checkpointed at each rung (for growth slopes).
  KahanSumC signed_sum;
  KahanSum abs_sum;
  double run_max_signed = 0.0, run_max_abs = 0.0;
  const std::size_t support = f.support_size();
  std::vector<index_t> pn;
  std::vector<cplx> ps;
  std::vector<double> pa;
  pn.reserve(support);
  ps.reserve(support);
  pa.reserve(support);
  std::vector<cplx> s_at(ladder.size());
  std::vector<double> a_at(ladder.size());
  std::vector<double> smax_at(ladder.size()), amax_at(ladder.size());
  std::size_t rung = 0;
  for (const auto& [n, a] : f.coeffs()) {
    while (rung < ladder.size() && n > ladder[rung]) {
      s_at[rung] = signed_sum.value();
      a_at[rung] = abs_sum.value();
      smax_at[rung] = run_max_signed;
      amax_at[rung] = run_max_abs;
      ++rung;
    }
    signed_sum.add(a);
    abs_sum.add(std::abs(a));
    pn.push_back(n);
    ps.push_back(signed_sum.value());
    pa.push_back(abs_sum.value());
    run_max_signed = std::max(run_max_signed, std::abs(signed_sum.value()));
    run_max_abs = std::max(run_max_abs, abs_sum.value());
  }
  for (; rung < ladder.size(); ++rung) {
    s_at[rung] = signed_sum.value();
    a_at[rung] = abs_sum.value();
    smax_at[rung] = run_max_signed;
    amax_at[rung] = run_max_abs;
  }

  // Suffix bounding boxes of the signed prefix sums: box[i] covers every
  // partial sum from support point i onward.
  std::vector<double> re_hi(support), re_lo(support), im_hi(support),
      im_lo(support);
  for (std::size_t i = support; i-- > 0;) {
    re_hi[i] = ps[i].real();
    re_lo[i] = ps[i].real();
    im_hi[i] = ps[i].imag();
    im_lo[i] = ps[i].imag();
    if (i + 1 < support) {
      re_hi[i] = std::max(re_hi[i], re_hi[i + 1]);
      re_lo[i] = std::min(re_lo[i], re_lo[i + 1]);
      im_hi[i] = std::max(im_hi[i], im_hi[i + 1]);
      im_lo[i] = std::min(im_lo[i], im_lo[i + 1]);
    }
  }

  // Cauchy-tail proxy at rung M: sup over every later partial sum S_N of
  // |S_N - S_M|, evaluated through the suffix box (exact within a factor
  // sqrt(2), a constant that cannot tilt a log-log slope).  A single lucky
  // near-cancellation at one checkpoint no longer shrinks the tail.
  auto signed_tail = [&](std::size_t j) {
    std::size_t i = static_cast<std::size_t>(
        std::lower_bound(pn.begin(), pn.end(), ladder[j] + 1) - pn.begin());
    if (i >= support) return 0.0;
    const double dre = std::max(re_hi[i] - s_at[j].real(),
                                s_at[j].real() - re_lo[i]);
    const double dim = std::max(im_hi[i] - s_at[j].imag(),
                                s_at[j].imag() - im_lo[i]);
    return std::hypot(std::max(dre, 0.0), std::max(dim, 0.0));
  };

  auto build = [&](bool absolute) {
    std::vector<Rung> rungs;
    for (std::size_t j = 0; j + 1 < ladder.size(); ++j) {  // skip the M=N rung
      Rung r;
      r.log_m = std::log(static_cast<double>(ladder[j]));
      double growth = absolute ? amax_at[j] : smax_at[j];
      r.growth = growth > 0 ? std::log(growth) : std::log(1e-300);
      // Absolute sums are monotone, so their sup-deviation is the plain
      // remainder; signed sums need the suffix-box sup.
      double tail = absolute ? (pa.back() - a_at[j]) : signed_tail(j);
      r.tail = tail > 0 ? std::log(tail) : std::nan("");
      rungs.push_back(r);
    }
    return rungs;
  };

  double sc = estimate_one(build(false));
  double sa = estimate_one(build(true));
  rep.sigma_c_est = sc;
  rep.sigma_a_est = sa;
  rep.sigma_u_lo = sc;
  rep.sigma_u_hi = sa;
  return rep;
}

}  // namespace acp
