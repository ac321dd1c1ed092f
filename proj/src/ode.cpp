#include "acplus/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "acplus/errors.hpp"

namespace acp {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0,
                 A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0;
constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0,
                 A63 = 46732.0 / 5247.0, A64 = 49.0 / 176.0,
                 A65 = -5103.0 / 18656.0;
constexpr double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0,
                 B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0;
// 5th-order minus 4th-order weights (error estimate).
constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0,
                 E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;

[[noreturn]] void fail(const char* why, double t, double span, cplx y) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s at t=%.6g of %.6g (state %.6g%+.6gi)",
                why, t, span, y.real(), y.imag());
  throw Error(ErrorCode::numeric, buf);
}

}  // namespace

OdeResult integrate_flow(const ComplexMap& F, cplx y0, double span, double tol,
                         long max_steps) {
  require(std::isfinite(span) && span >= 0.0, ErrorCode::precondition,
          "integration span must be finite and nonnegative");
  require(tol > 0.0, ErrorCode::precondition, "ode tolerance must be positive");
  OdeResult out{y0, 0, 0};
  if (span == 0.0) return out;

  double t = 0.0;
  cplx y = y0;
  cplx k1 = F(y);
  double h = std::min(span, std::max(span / 100.0, 1e-6 * span));
  const double h_floor = span * 1e-14;

  while (t < span) {
    if (out.steps + out.rejected >= max_steps)
      fail("ode step budget exhausted", t, span, y);
    h = std::min(h, span - t);
    if (h < h_floor) fail("ode step size underflow", t, span, y);

    const cplx k2 = F(y + h * (A21 * k1));
    const cplx k3 = F(y + h * (A31 * k1 + A32 * k2));
    const cplx k4 = F(y + h * (A41 * k1 + A42 * k2 + A43 * k3));
    const cplx k5 = F(y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
    const cplx k6 =
        F(y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
    const cplx y5 = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
    const cplx k7 = F(y5);  // FSAL stage
    const cplx err_vec =
        h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);

    const double err = std::abs(err_vec);
    if (!std::isfinite(err) || !std::isfinite(std::abs(y5)))
      fail("ode state became non-finite", t, span, y);
    // Error per unit step: budget tol*(1+|y|) spread across the whole span.
    const double budget = tol * (1.0 + std::abs(y)) * (h / span);
    if (err <= budget) {
      t += h;
      y = y5;
      k1 = k7;
      ++out.steps;
    } else {
      ++out.rejected;
    }
    const double ratio = budget / std::max(err, 1e-300);
    double factor = 0.9 * std::pow(ratio, 0.2);
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
  }
  out.y = y;
  return out;
}

}  // namespace acp
