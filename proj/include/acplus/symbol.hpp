#pragma once
// Composition symbols Phi(s) = c s + phi(s) on the right half-plane, where c
// (the "characteristic") is a non-negative integer and phi is either
//   * series-backed: a truncated Dirichlet series, or
//   * map-backed:    g(z(s)) + offset, a named disc map g applied to the
//                    value of an inner Dirichlet polynomial z(s) with values
//                    in the unit disc (inner = k^{-s} is the periodic case).
//
// Class diagnostics follow the usual hierarchy: G_infty (self-map of C_+ with
// integer characteristic), G (c >= 1, or range inside Re > 1/2), and G_A
// (uniform continuity on every truncated band A_M = {0 < Re Phi < M}),
// probed through the modulus of continuity omega(delta) on sampled grids.
// Compactness of the induced composition operator is equivalent to the range
// lying in some Re >= eps half-plane, so the diagnostic estimates
// inf Re Phi: a grid minimum refined by golden-section descent in sigma gives
// the observed side, and for series-backed symbols the l1 coefficient bound
// Re a_1 - sum_{n>=2} |a_n| certifies a sound lower bound (grid padding can
// never certify over the unbounded imaginary direction).

#include <optional>
#include <vector>

#include "acplus/discmaps.hpp"
#include "acplus/gridscan.hpp"
#include "acplus/series.hpp"

namespace acp {

struct MapPart {
  DiscMap map;
  Series inner;  // values must stay in the closed unit disc on C_+
  cplx offset = 0.0;
};

struct SymbolValidation {
  RegionSpec region;
  double re_min = 0.0;
  cplx argmin;
};

class Symbol {
 public:
  Symbol(int characteristic, Series phi);
  Symbol(int characteristic, MapPart part);

  int characteristic() const { return c_; }
  bool series_backed() const { return !map_.has_value(); }
  const Series& series_part() const;  // phi for series-backed symbols
  const MapPart& map_part() const;
  const SymbolValidation& validation() const { return validation_; }

  // Requires Re s > 0.
  cplx evaluate(cplx s) const;
  // phi(s) alone, i.e. evaluate(s) - c*s (no domain guard; used internally).
  cplx fringe(cplx s) const;

  // Imaginary period 2 pi / ln k when every non-constant index is a power of
  // a single base k.
  std::optional<double> period() const;

  // Phi(s + h) as a new symbol (exact coefficient twist).
  Symbol translate(double h) const;

  // Builtin registry: example1_not_GA, example2_GA_not_UC, prop_algebrab_phi,
  // prop_algebrab_F.
  static Symbol builtin(const std::string& name);

 private:
  void validate_self_map();
  int c_ = 0;
  std::optional<Series> series_;
  std::optional<MapPart> map_;
  SymbolValidation validation_;
};

struct PointWitness {
  cplx s;
  double re_phi = 0.0;
};

struct MembershipReport {
  bool in_class = false;
  std::optional<PointWitness> counterexample;
  double grid_min = 0.0;
};

struct ProbePair {
  cplx s1, s2;
  double gap = 0.0;        // |s1 - s2|
  double value_gap = 0.0;  // |Phi(s1) - Phi(s2)|
};

struct ContinuityProbe {
  RegionSpec region;
  std::size_t points_retained = 0;
  std::vector<double> deltas;
  std::vector<double> omega;
  std::vector<std::optional<ProbePair>> worst_pairs;
  double threshold = 0.1;
  bool violated = false;
};

struct CompactnessReport {
  bool compact = false;
  double epsilon = 0.0;  // certified lower bound when compact
  bool certified = false;
  double observed_inf = 0.0;
  cplx argmin;
};

struct ClassReport {
  MembershipReport g_infty;
  MembershipReport g;
  ContinuityProbe ga;
  CompactnessReport compactness;
};

MembershipReport classify_G_infty(const Symbol& phi, const RegionSpec& region);
MembershipReport classify_G(const Symbol& phi, const RegionSpec& region);
ContinuityProbe probe_G_A(const Symbol& phi, const RegionSpec& region,
                          std::vector<double> deltas, double threshold = 0.1);
CompactnessReport compactness_diagnostic(const Symbol& phi,
                                         const RegionSpec& region);
ClassReport classify(const Symbol& phi, const RegionSpec& region,
                     const std::vector<double>& deltas = {1e-2, 1e-3},
                     double threshold = 0.1);

}  // namespace acp
