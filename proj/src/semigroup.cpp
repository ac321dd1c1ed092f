#include "acplus/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "acplus/errors.hpp"
#include "acplus/quadrature.hpp"

namespace acp {

namespace {

[[noreturn]] void fail_witness(const char* what, cplx where, double value) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s (witness %.6g%+.6gi, value %.6g)", what,
                where.real(), where.imag(), value);
  throw Error(ErrorCode::precondition, buf);
}

}  // namespace

GeneratorSpec validate_generator(ComplexMap H, const RegionSpec& region,
                                 std::optional<ComplexMap> h_prime) {
  region.validate();
  GeneratorSpec spec;
  spec.region = region;
  double re_min = std::numeric_limits<double>::infinity();
  cplx argmin;
  for_each_grid_point(region, std::nullopt, [&](cplx s) {
    const cplx v = H(s);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return;
    if (v.real() < re_min) {
      re_min = v.real();
      argmin = s;
    }
  });
  require(std::isfinite(re_min), ErrorCode::precondition,
          "generator is non-finite on the whole sample grid");
  if (re_min < -1e-9)
    fail_witness("generator has negative real part", argmin, re_min);
  spec.H = std::move(H);
  spec.h_prime = std::move(h_prime);
  spec.re_min = re_min;
  spec.argmin = argmin;
  return spec;
}

KoenigsSpec koenigs_from_generator(const GeneratorSpec& gen, double quad_tol) {
  KoenigsSpec k;
  k.H = gen.H;
  if (gen.h_prime) {
    k.h_prime = *gen.h_prime;
  } else {
    ComplexMap H = gen.H;
    k.h_prime = [H](cplx s) { return cplx(1.0) / H(s); };
  }
  ComplexMap hp = k.h_prime;
  k.h = [hp, quad_tol](cplx s) {
    return integrate_segment(hp, cplx(1.0), s, quad_tol);
  };
  return k;
}

KoenigsSpec spirallike_koenigs(const SpirallikeSpec& spec) {
  require(spec.c.real() > 0.0, ErrorCode::precondition,
          "spirallike parameter needs positive real part");
  require(spec.base >= 2, ErrorCode::precondition,
          "spirallike base must be >= 2");

  // q(z) = z f'(z) / (c f(z)); spirallike means Re q > 0 on the disc.
  const DiscMap f = spec.f;
  const cplx c = spec.c;
  auto q = [f, c](cplx z) -> cplx {
    if (std::abs(z) < 1e-9) return cplx(1.0) / c;  // limit for f(0)=0, f'(0)!=0
    return z * f.derivative(z) / (c * f.value(z));
  };
  double cert_min = std::numeric_limits<double>::infinity();
  cplx cert_arg;
  for (int ir = 1; ir <= 32; ++ir) {
    const double r = 0.98 * ir / 32.0;
    for (int ia = 0; ia < 128; ++ia) {
      const double th = 2.0 * M_PI * ia / 128.0;
      const cplx z = std::polar(r, th);
      const double re = q(z).real();
      if (!std::isfinite(re)) continue;
      if (re < cert_min) {
        cert_min = re;
        cert_arg = z;
      }
    }
  }
  if (!(cert_min > 0.0))
    fail_witness("spirallike certificate Re(z f'/(c f)) failed", cert_arg,
                 cert_min);

  const double lnk = std::log(static_cast<double>(spec.base));
  // h(s) = -(1/(c ln k)) (log f(k^{-s}) - log f(k^{-1})), branch tracked along
  // the segment from the anchor 1 to s.  The anchor term cancels whatever
  // branch is chosen there, so the principal value is fine as the seed.
  auto h = [f, c, lnk](cplx s) -> cplx {
    const cplx anchor_val = f.value(std::exp(-lnk));
    auto path = [&](double tau) {
      const cplx st = cplx(1.0) + tau * (s - cplx(1.0));
      return f.value(std::exp(-lnk * st));
    };
    const cplx log_end = continue_log(path, std::log(anchor_val));
    return -(log_end - std::log(anchor_val)) / (c * lnk);
  };
  auto h_prime = [f, c, lnk](cplx s) -> cplx {
    const cplx z = std::exp(-lnk * s);
    return z * f.derivative(z) / (c * f.value(z));
  };
  KoenigsSpec k;
  k.h = h;
  k.h_prime = h_prime;
  k.H = [h_prime](cplx s) { return cplx(1.0) / h_prime(s); };
  return k;
}

GeneratorSpec generator_from_koenigs(const KoenigsSpec& k,
                                     const RegionSpec& region) {
  return validate_generator(k.H, region, k.h_prime);
}

FlowResult flow_ode(const GeneratorSpec& gen, cplx s, double t, double tol,
                    const KoenigsSpec* residual_check) {
  require(s.real() > 0.0, ErrorCode::precondition,
          "flow start must lie in the right half-plane");
  OdeResult ode = integrate_flow(gen.H, s, t, tol);
  FlowResult out;
  out.start = s;
  out.t = t;
  out.value = ode.y;
  out.method = "ode";
  out.work = ode.steps;
  if (residual_check)
    out.residual =
        std::abs(residual_check->h(ode.y) - residual_check->h(s) - t);
  return out;
}

FlowResult flow_koenigs(const KoenigsSpec& k, cplx s, double t, double tol) {
  require(s.real() > 0.0, ErrorCode::precondition,
          "flow start must lie in the right half-plane");
  require(tol > 0.0, ErrorCode::precondition, "tolerance must be positive");

  const cplx target = k.h(s) + t;
  cplx w = s;
  if (t > 0.1) {
    try {
      w = integrate_flow(k.H, s, t, 1e-3).y;  // coarse seed
    } catch (const Error&) {
      w = s;
    }
  }

  FlowResult out;
  out.start = s;
  out.t = t;
  out.method = "koenigs-newton";
  double res = std::abs(k.h(w) - target);
  for (int iter = 0; iter < 100; ++iter) {
    out.work = iter;
    if (res <= tol) {
      out.value = w;
      out.residual = res;
      return out;
    }
    const cplx step = (k.h(w) - target) * k.H(w);  // (h(w)-target)/h'(w)
    double lambda = 1.0;
    bool moved = false;
    for (int halving = 0; halving < 60; ++halving) {
      const cplx trial = w - lambda * step;
      if (trial.real() > 1e-14) {
        const double trial_res = std::abs(k.h(trial) - target);
        if (std::isfinite(trial_res) && trial_res < res) {
          w = trial;
          res = trial_res;
          moved = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!moved)
      throw Error(ErrorCode::numeric,
                  "flow solve stalled: damped step cannot reduce the residual");
  }
  throw Error(ErrorCode::numeric,
              "flow solve did not reach tolerance within 100 iterations");
}

Flow make_ode_flow(const GeneratorSpec& gen, double tol) {
  return [gen, tol](cplx s, double t) { return flow_ode(gen, s, t, tol).value; };
}

Flow make_koenigs_flow(const KoenigsSpec& k, double tol) {
  return
      [k, tol](cplx s, double t) { return flow_koenigs(k, s, t, tol).value; };
}

std::vector<cplx> sample_points(const RegionSpec& region,
                                std::size_t max_points) {
  std::vector<cplx> all;
  for_each_grid_point(region, std::nullopt,
                      [&](cplx s) { all.push_back(s); });
  if (all.size() <= max_points) return all;
  std::vector<cplx> out;
  out.reserve(max_points);
  const std::size_t stride = (all.size() + max_points - 1) / max_points;
  for (std::size_t i = 0; i < all.size(); i += stride) out.push_back(all[i]);
  return out;
}

LawCheckReport semigroup_law_check(const Flow& flow, const RegionSpec& region,
                                   double t, double u,
                                   std::size_t max_points) {
  require(t >= 0.0 && u >= 0.0, ErrorCode::precondition,
          "semigroup times must be nonnegative");
  LawCheckReport report;
  report.t = t;
  report.u = u;
  for (cplx s : sample_points(region, max_points)) {
    const cplx lhs = flow(s, t + u);
    const cplx rhs = flow(flow(s, u), t);
    const double dev = std::abs(lhs - rhs);
    ++report.points;
    if (dev > report.max_residual) {
      report.max_residual = dev;
      report.arg_worst = s;
    }
  }
  return report;
}

std::vector<IdentityScanRow> identity_convergence_scan(
    const Flow& flow, const RegionSpec& region, const std::vector<double>& ts,
    std::size_t max_points) {
  const std::vector<cplx> pts = sample_points(region, max_points);
  std::vector<IdentityScanRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    require(t >= 0.0, ErrorCode::precondition,
            "semigroup times must be nonnegative");
    IdentityScanRow row;
    row.t = t;
    for (cplx s : pts) {
      const double dev = std::abs(flow(s, t) - s);
      if (dev > row.sup_deviation) {
        row.sup_deviation = dev;
        row.argmax = s;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<RecoveryRow> generator_recovery_check(
    const Flow& flow, const ComplexMap& H, const RegionSpec& region,
    const std::vector<double>& ts, std::size_t max_points) {
  const std::vector<cplx> pts = sample_points(region, max_points);
  std::vector<RecoveryRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    require(t > 0.0, ErrorCode::precondition,
            "difference quotients need t > 0");
    RecoveryRow row;
    row.t = t;
    for (cplx s : pts) {
      const double err = std::abs((flow(s, t) - s) / t - H(s));
      if (err > row.max_error) {
        row.max_error = err;
        row.argmax = s;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<TransitionRow> compact_transition_scan(
    const KoenigsSpec& k, const RegionSpec& region,
    const std::vector<double>& ts, double tol, std::size_t max_points) {
  const std::vector<cplx> pts = sample_points(region, max_points);
  std::vector<TransitionRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    TransitionRow row;
    row.t = t;
    row.inf_re = std::numeric_limits<double>::infinity();
    for (cplx s : pts) {
      cplx w;
      try {
        w = flow_koenigs(k, s, t, tol).value;
      } catch (const Error&) {
        ++row.failures;
        continue;
      }
      if (w.real() < row.inf_re) {
        row.inf_re = w.real();
        row.argmin = s;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace acp
