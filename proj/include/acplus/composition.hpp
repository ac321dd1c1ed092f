#pragma once
/*
  Composition of a truncated Dirichlet series with an affine-plus-series
  symbol Phi(s) = c*s + phi(s).

  The building block is the pullback of a single monomial n^{-s}:

      n^{-Phi(s)} = n^{-a1} * n^{-c s} * exp(-(log n) * (phi - a1))(s)

  where a1 is the constant coefficient of phi.  The exponential of a series
  with vanishing constant term is again a series supported on indices > 1,
  so the pullback is a genuine Dirichlet series whose index support lives on
  multiples of n^c.  Composition is the coefficient-linear combination of
  monomial pullbacks; every truncation step feeds an explicit l1 majorant on
  the dropped mass so results stay certified.
*/

#include "acplus/gridscan.hpp"
#include "acplus/series.hpp"
#include "acplus/symbol.hpp"

namespace acp {

struct PullbackResult {
  Series series;
  double dropped_mass = 0.0;  // l1 mass lost to the index cap (Re s >= 0)
};

inline constexpr index_t kDefaultClosure = 1 << 16;

// Pullback of n^{-s} through a series-backed symbol, truncated at `closure`.
PullbackResult monomial_pullback(index_t n, const Symbol& phi,
                                 index_t closure = kDefaultClosure);

// Composition f o Phi as a truncated Dirichlet series.
PullbackResult compose(const Series& f, const Symbol& phi,
                       index_t closure = kDefaultClosure);

struct ContractionReport {
  double composed_sup = 0.0;  // sampled sup of |f o Phi| near the boundary
  double source_sup = 0.0;    // sampled sup of |f|
  double slack = 0.0;         // source_sup + tolerance - composed_sup
  bool contractive = false;
};

// Samples both sup norms over the region grid and checks that composition
// does not increase the norm beyond `tolerance`.
ContractionReport verify_contraction(const Series& f, const Symbol& phi,
                                     const RegionSpec& region,
                                     double tolerance = 1e-9,
                                     index_t closure = kDefaultClosure);

}  // namespace acp
