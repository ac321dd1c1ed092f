#include "acplus/quadrature.hpp"

#include <cmath>

#include "acplus/errors.hpp"

namespace acp {

namespace {

struct SimpsonCtx {
  const ComplexMap& f;
  double tol;
  int max_depth;
};

cplx simpson_rec(const SimpsonCtx& ctx, cplx a, cplx b, cplx fa, cplx fm,
                 cplx fb, cplx whole, int depth) {
  const cplx m = 0.5 * (a + b);
  const cplx lm = 0.5 * (a + m);
  const cplx rm = 0.5 * (m + b);
  const cplx flm = ctx.f(lm);
  const cplx frm = ctx.f(rm);
  const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const cplx refined = left + right;
  const double err = std::abs(refined - whole);
  if (!std::isfinite(err))
    throw Error(ErrorCode::numeric, "quadrature integrand is non-finite");
  const double scale = ctx.tol * (1.0 + std::abs(refined));
  if (err <= 15.0 * scale || depth >= ctx.max_depth) {
    if (depth >= ctx.max_depth && err > 1e6 * scale)
      throw Error(ErrorCode::numeric, "quadrature refinement stalled");
    return refined + (refined - whole) / 15.0;  // Richardson correction
  }
  return simpson_rec(ctx, a, m, fa, flm, fm, left, depth + 1) +
         simpson_rec(ctx, m, b, fm, frm, fb, right, depth + 1);
}

}  // namespace

cplx integrate_segment(const ComplexMap& f, cplx a, cplx b, double tol) {
  require(tol > 0.0, ErrorCode::precondition,
          "quadrature tolerance must be positive");
  if (a == b) return 0.0;
  SimpsonCtx ctx{f, tol, 48};
  // Seed with a few panels so symmetric integrands do not fool the estimate.
  cplx total = 0.0;
  constexpr int kPanels = 8;
  cplx lo = a;
  cplx flo = f(lo);
  for (int p = 1; p <= kPanels; ++p) {
    const cplx hi = a + (b - a) * (static_cast<double>(p) / kPanels);
    const cplx fm = f(0.5 * (lo + hi));
    const cplx fhi = f(hi);
    const cplx whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    total += simpson_rec(ctx, lo, hi, flo, fm, fhi, whole, 0);
    lo = hi;
    flo = fhi;
  }
  return total;
}

cplx continue_log(const std::function<cplx(double)>& w, cplx log_at_start) {
  cplx log_acc = log_at_start;
  double tau = 0.0;
  cplx cur = w(0.0);
  require(std::isfinite(std::abs(cur)) && cur != cplx(0.0),
          ErrorCode::numeric, "log continuation hit a zero of the function");
  double h = 0.125;
  long steps = 0;
  while (tau < 1.0) {
    if (++steps > 200000)
      throw Error(ErrorCode::numeric, "log continuation stalled");
    h = std::min(h, 1.0 - tau);
    const cplx nxt = w(tau + h);
    if (!std::isfinite(std::abs(nxt)) || nxt == cplx(0.0))
      throw Error(ErrorCode::numeric,
                  "log continuation hit a zero of the function");
    const cplx ratio = nxt / cur;
    if (std::abs(ratio - 1.0) > 0.5) {
      h *= 0.5;
      if (h < 1e-12)
        throw Error(ErrorCode::numeric, "log continuation step underflow");
      continue;
    }
    log_acc += std::log(ratio);  // principal branch is safe: ratio near 1
    cur = nxt;
    tau += h;
    if (std::abs(ratio - 1.0) < 0.1) h *= 1.5;
  }
  return log_acc;
}

}  // namespace acp
