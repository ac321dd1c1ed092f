#pragma once
// Adaptive Simpson quadrature along straight segments in the complex plane,
// plus analytic-continuation helpers: a branch-tracked logarithm along a path
// and a path integral that follows a moving endpoint.

#include <functional>

#include "acplus/complexutil.hpp"

namespace acp {

using ComplexMap = std::function<cplx(cplx)>;

// Integral of f over the straight segment [a, b].  Tolerance is mixed
// absolute/relative; throws Error(numeric) if refinement stalls.
cplx integrate_segment(const ComplexMap& f, cplx a, cplx b, double tol);

// log w(1) continued from a known value of log w(0) along the path
// tau -> w(tau), tau in [0,1].  Steps are refined until consecutive values
// satisfy |ratio - 1| <= 0.5, which pins the branch.  Throws Error(numeric)
// if w vanishes on the path or refinement stalls.
cplx continue_log(const std::function<cplx(double)>& w, cplx log_at_start);

}  // namespace acp
