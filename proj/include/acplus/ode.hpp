#pragma once
// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince pair, FSAL) for complex
// autonomous ODEs w' = F(w).  Error control is per unit step so the global
// error tracks the requested tolerance over the whole span.

#include <functional>

#include "acplus/complexutil.hpp"

namespace acp {

using ComplexMap = std::function<cplx(cplx)>;

struct OdeResult {
  cplx y;
  long steps = 0;
  long rejected = 0;
};

// Integrates w' = F(w) from w(0) = y0 over [0, span] (span >= 0).  Throws
// Error(numeric) on step-size underflow or when max_steps is exhausted,
// embedding the partial state in the message.
OdeResult integrate_flow(const ComplexMap& F, cplx y0, double span, double tol,
                         long max_steps = 1000000);

}  // namespace acp
