#pragma once
// Convergence-abscissa estimators from coefficient statistics.
//
// Background: a Dirichlet series has abscissae sigma_c <= sigma_b = sigma_u <=
// sigma_a <= sigma_c + 1.  For divergent partial sums the classical growth
// formulas give sigma_c = limsup log|S(M)| / log M (S = running partial sum,
// tracked through its running maximum to survive oscillation) and sigma_a the
// same with absolute sums.  When the sums stabilise instead, the tail decay
// log|S(N) - S(M)| / log M carries the (non-positive) abscissa.  Estimation
// is a least-squares slope fit over a geometric index ladder.

#include <optional>

#include "acplus/series.hpp"

namespace acp {

struct AbscissaeReport {
  // nullopt encodes the -infinity sentinel (exact polynomial fast path).
  std::optional<double> sigma_c_est;
  std::optional<double> sigma_a_est;
  // sigma_u is bracketed by [sigma_c_est, sigma_a_est].
  std::optional<double> sigma_u_lo;
  std::optional<double> sigma_u_hi;
  std::size_t samples_used = 0;
  bool polynomial_exact = false;
};

// Estimator tolerance quoted by the chain invariant tests.
inline constexpr double kAbscissaTolerance = 0.15;

// Requires at least 32 nonzero coefficients for the slope fits; fewer (or an
// exact-polynomial tail tag) takes the polynomial fast path (-inf sentinels).
AbscissaeReport estimate_abscissae(const Series& f);

}  // namespace acp
