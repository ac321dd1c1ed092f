#include "acplus/composition.hpp"

#include <cmath>
#include <map>

#include "acplus/errors.hpp"

namespace acp {

namespace {

// (-log n) * (phi - a1) as a series with zero constant term, tail kept.
Series pullback_exponent(const Series& phi, index_t n) {
  const double ln = std::log(static_cast<double>(n));
  std::map<index_t, cplx> coeffs;
  for (const auto& [m, a] : phi.coeffs())
    if (m > 1) coeffs[m] = -ln * a;
  TailInfo tail = phi.tail();
  tail.majorant *= ln;
  return Series(std::move(coeffs), phi.truncation(), tail);
}

// n^c, saturated just past `cap` so callers can detect overflow.
index_t pow_saturated(index_t n, int c, index_t cap) {
  index_t p = 1;
  for (int i = 0; i < c; ++i) {
    if (p > cap / n) return cap + 1;
    p *= n;
  }
  return p;
}

}  // namespace

PullbackResult monomial_pullback(index_t n, const Symbol& phi,
                                 index_t closure) {
  require(phi.series_backed(), ErrorCode::precondition,
          "pullback needs a series-backed symbol");
  require(n >= 1, ErrorCode::usage, "pullback index must be >= 1");
  require(closure >= 1, ErrorCode::usage, "closure must be >= 1");
  if (n == 1) return {Series::constant(1.0, closure), 0.0};

  const Series& part = phi.series_part();
  const index_t nc = pow_saturated(n, phi.characteristic(), closure);
  require(nc <= closure, ErrorCode::precondition,
          "closure is smaller than n^characteristic; pullback support is empty");

  Series exp_part = exp_series(pullback_exponent(part, n), closure / nc);
  Series pulled =
      phi.characteristic() > 0 ? exp_part.dilate(nc, closure) : exp_part;
  const cplx a1 = part.a1();
  pulled.scale(std::exp(-a1 * std::log(static_cast<double>(n))));
  // After scaling, the tail majorant is exactly the mass this pullback lost.
  return {pulled, pulled.tail().majorant};
}

PullbackResult compose(const Series& f, const Symbol& phi, index_t closure) {
  require(phi.series_backed(), ErrorCode::precondition,
          "composition needs a series-backed symbol");
  require(closure >= 1, ErrorCode::usage, "closure must be >= 1");
  require(phi.validation().re_min > -1e-6, ErrorCode::precondition,
          "symbol is not a self-map of the right half-plane");

  const Series& part = phi.series_part();
  const cplx a1 = part.a1();
  const double ell1_rest = part.l1_norm(false);

  Series acc = Series::zero(closure);
  double extra_majorant = 0.0;
  for (const auto& [n, an] : f.coeffs()) {
    const double ln = std::log(static_cast<double>(n));
    if (n > 1 &&
        pow_saturated(n, phi.characteristic(), closure) > closure) {
      // Entire pullback of this monomial falls past the cap.  Its full mass
      // (valid on Re s >= 0) is |a_n| * n^{-Re a1} * e^{ln n * ||phi - a1||}.
      extra_majorant +=
          std::abs(an) * std::exp(ln * (ell1_rest - a1.real()));
      continue;
    }
    PullbackResult pb = monomial_pullback(n, phi, closure);
    pb.series.scale(an);
    acc = add(acc, pb.series);
  }

  // Transport f's own tail bound: |tail_f(Phi(s))| <= B_f wherever
  // Re Phi(s) >= valid_from_f.  The coefficient bound Re Phi >= c*Re s +
  // Re a1 - ||phi - a1||_1 converts that into a half-plane in s.
  double valid_from = 0.0;
  if (!f.exact() && f.tail().majorant > 0.0) {
    const double kappa = a1.real() - ell1_rest;  // inf Re phi on Re s >= 0
    const double need = f.tail().valid_from - kappa;
    if (need > 0.0) {
      require(phi.characteristic() >= 1, ErrorCode::precondition,
              "cannot transport the tail bound of f through a symbol of "
              "characteristic zero with this little coefficient slack");
      valid_from = need / phi.characteristic();
    }
    extra_majorant += f.tail().majorant;
  }

  if (extra_majorant > 0.0) {
    TailInfo tail = acc.tail();
    tail.kind = TailKind::truncated_with_bound;
    tail.majorant += extra_majorant;
    tail.valid_from = std::max(tail.valid_from, valid_from);
    acc = Series(std::map<index_t, cplx>(acc.coeffs()), acc.truncation(), tail);
  }
  return {acc, acc.tail().majorant};
}

ContractionReport verify_contraction(const Series& f, const Symbol& phi,
                                     const RegionSpec& region, double tolerance,
                                     index_t closure) {
  PullbackResult composed = compose(f, phi, closure);
  ContractionReport report;
  report.source_sup =
      sup_norm_estimate(f, 0.0, region.t_window, region.grid_step);
  double sup = 0.0;
  for (double sigma : sigma_ladder(region))
    sup = std::max(sup, sup_norm_estimate(composed.series, sigma,
                                          region.t_window, region.grid_step));
  report.composed_sup = sup;
  report.slack = report.source_sup + tolerance + composed.dropped_mass -
                 report.composed_sup;
  report.contractive = report.slack >= 0.0;
  return report;
}

}  // namespace acp
