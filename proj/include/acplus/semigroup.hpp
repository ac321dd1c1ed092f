#pragma once
/*
  One-parameter semigroups (Phi_t)_{t >= 0} of holomorphic self-maps of the
  right half-plane, described either by

    * a generator H with Re H >= 0, where the flow solves  w' = H(w),
      w(0) = s, so that Phi_t(s) = w(t); or
    * a Koenigs map h, a univalent function with  h(Phi_t(s)) = h(s) + t,
      normalized by h(1) = 0.  The two views are linked by h' = 1/H.

  Flows can be computed by adaptive ODE integration of the generator or by
  Newton iteration on the Koenigs functional equation (seeded with s for
  short times, otherwise with a coarse ODE solve).  Koenigs maps come from
  generators via path integration of h' from the anchor point 1, or in
  closed form from spirallike planar data: if f maps the unit disc onto a
  domain spirallike with parameter c (certificate Re(z f'(z) / (c f(z))) > 0),
  then h(s) = -(1 / (c log k)) * log f(k^{-s}) with a branch-tracked log.

  The remaining routines are diagnostics over sampled grids: the semigroup
  law Phi_{t+u} = Phi_t o Phi_u, convergence Phi_t -> id as t -> 0+, recovery
  of H from difference quotients, and the evolution of inf Re Phi_t with t
  (the compactness transition of the induced composition operators).
*/

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acplus/complexutil.hpp"
#include "acplus/discmaps.hpp"
#include "acplus/gridscan.hpp"
#include "acplus/ode.hpp"

namespace acp {

struct GeneratorSpec {
  ComplexMap H;                         // generator, Re H >= 0 on C_+
  std::optional<ComplexMap> h_prime;    // closed form for 1/H when known
  RegionSpec region;                    // where the sign condition was checked
  double re_min = 0.0;                  // observed min Re H over that grid
  cplx argmin;
};

// Checks min Re H over the region grid; throws Error(precondition) with the
// witnessing point when the sign condition fails.
GeneratorSpec validate_generator(ComplexMap H, const RegionSpec& region,
                                 std::optional<ComplexMap> h_prime = {});

struct KoenigsSpec {
  ComplexMap h;        // normalized h(1) = 0
  ComplexMap h_prime;
  ComplexMap H;        // 1/h', used for ODE seeding
};

// Koenigs map by path integration of h' along [1, s] (the segment stays in
// the half-plane by convexity).
KoenigsSpec koenigs_from_generator(const GeneratorSpec& gen,
                                   double quad_tol = 1e-12);

struct SpirallikeSpec {
  DiscMap f;      // univalent on the unit disc, f(0) = 0
  cplx c;         // spirallike parameter, Re c > 0
  int base = 2;   // k in z = k^{-s}
};

// Closed-form Koenigs map from spirallike planar data; samples the
// certificate Re(z f'/(c f)) on disc circles and throws Error(precondition)
// with a witness when it fails.
KoenigsSpec spirallike_koenigs(const SpirallikeSpec& spec);

// Generator view of a Koenigs description (H = 1/h'), validated on the grid.
GeneratorSpec generator_from_koenigs(const KoenigsSpec& k,
                                     const RegionSpec& region);

struct FlowResult {
  cplx start;
  double t = 0.0;
  cplx value;
  std::optional<double> residual;  // |h(value) - h(start) - t| when h known
  std::string method;              // "ode" or "koenigs-newton"
  long work = 0;                   // accepted ODE steps resp. Newton iterations
};

FlowResult flow_ode(const GeneratorSpec& gen, cplx s, double t, double tol,
                    const KoenigsSpec* residual_check = nullptr);
FlowResult flow_koenigs(const KoenigsSpec& k, cplx s, double t, double tol);

using Flow = std::function<cplx(cplx, double)>;

Flow make_ode_flow(const GeneratorSpec& gen, double tol);
Flow make_koenigs_flow(const KoenigsSpec& k, double tol);

// Deterministic subsample of the region grid, at most max_points points.
std::vector<cplx> sample_points(const RegionSpec& region,
                                std::size_t max_points);

struct LawCheckReport {
  double t = 0.0, u = 0.0;
  std::size_t points = 0;
  double max_residual = 0.0;  // max |Phi_{t+u}(s) - Phi_t(Phi_u(s))|
  cplx arg_worst;
};

LawCheckReport semigroup_law_check(const Flow& flow, const RegionSpec& region,
                                   double t, double u,
                                   std::size_t max_points = 64);

struct IdentityScanRow {
  double t = 0.0;
  double sup_deviation = 0.0;  // sup over the grid of |Phi_t(s) - s|
  cplx argmax;
};

std::vector<IdentityScanRow> identity_convergence_scan(
    const Flow& flow, const RegionSpec& region, const std::vector<double>& ts,
    std::size_t max_points = 4096);

struct RecoveryRow {
  double t = 0.0;
  double max_error = 0.0;  // max |(Phi_t(s) - s)/t - H(s)|
  cplx argmax;
};

std::vector<RecoveryRow> generator_recovery_check(
    const Flow& flow, const ComplexMap& H, const RegionSpec& region,
    const std::vector<double>& ts, std::size_t max_points = 256);

struct TransitionRow {
  double t = 0.0;
  double inf_re = 0.0;  // observed inf Re Phi_t over the grid
  cplx argmin;
  std::size_t failures = 0;  // points where the flow solve failed
};

std::vector<TransitionRow> compact_transition_scan(
    const KoenigsSpec& k, const RegionSpec& region,
    const std::vector<double>& ts, double tol = 1e-10,
    std::size_t max_points = 2048);

}  // namespace acp
