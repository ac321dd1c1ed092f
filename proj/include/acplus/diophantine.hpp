#pragma once
/*
  Simultaneous approximation on the imaginary axis.  For frequencies
  omega_1..omega_m and target angles tau_1..tau_m, kronecker_search looks for
  a real t with  dist(t*omega_i - tau_i, 2*pi*Z) <= epsilon  for all i.  With
  rationally independent frequencies such t exist for every epsilon > 0
  (density of the orbit on the torus); the search anchors one frequency on
  its exact solution lattice and solves the remaining inhomogeneous
  one-parameter problem by continued-fraction (Ostrowski) descent for m = 2,
  by LLL reduction plus Babai rounding for m >= 3, and by a verified direct
  scan as fallback.  Every hit is re-verified by evaluation before return;
  not-found is a value (budget exhausted), not an error.

  recurrence_sequence steers a two-term series a2*2^{-s} + a3*3^{-s} toward a
  prescribed value w on the imaginary axis through a ladder of tolerances,
  and witness_pairs builds from it boundary pairs for the composed map
  F = exp(i log((1+z)/(1-z))) o phi showing that F is uniformly continuous in
  no neighbourhood of the boundary: pairs of points at distance <= delta whose
  F-values stay at least 2*e^{-pi/2} apart, with F-value arguments differing
  by exactly pi (the log-phase factor turns a modulus ratio of e^pi into a
  half-turn).
*/

#include <optional>
#include <string>
#include <vector>

#include "acplus/complexutil.hpp"
#include "acplus/series.hpp"

namespace acp {

struct KroneckerQuery {
  std::vector<double> frequencies;  // pairwise distinct, nonzero
  std::vector<double> targets;      // angles, same length
  double epsilon = 1e-3;            // allowed angular distance, in [0, pi)
  double t_max = 1e9;               // search budget |t| <= t_max

  void validate() const;
};

struct KroneckerHit {
  double t = 0.0;
  double worst_dist = 0.0;  // max_i dist(t*omega_i - tau_i, 2 pi Z), verified
  std::string method;       // "closed-form", "ostrowski", "lll", "scan"
};

std::optional<KroneckerHit> kronecker_search(const KroneckerQuery& q);

struct RecurrencePoint {
  double t = 0.0;
  cplx value;            // phi(i t)
  double error = 0.0;    // |phi(i t) - w|, verified <= epsilon
  double epsilon = 0.0;  // the ladder rung this point answers
};

// phi must be an exact series supported on {2, 3}; w must satisfy
// ||a2| - |a3|| <= |w| <= |a2| + |a3|.  Rungs must be positive unless w is
// hit exactly at t = 0.
std::vector<RecurrencePoint> recurrence_sequence(const Series& phi, cplx w,
                                                 std::vector<double> ladder,
                                                 double t_max = 1e9);

struct WitnessPair {
  cplx s1, s2;            // both in the open right half-plane
  double gap = 0.0;       // |s1 - s2| <= delta
  double value_gap = 0.0; // |F(s1) - F(s2)| >= 2 e^{-pi/2}
  double arg_gap = 0.0;   // angular distance of Arg F(s1), Arg F(s2); = pi
};

// delta in (0, 0.1]; throws Error(not_found) when the budget runs out before
// `count` pairs are certified.
std::vector<WitnessPair> witness_pairs(double delta, int count = 2,
                                       double t_max = 1e9);

}  // namespace acp
