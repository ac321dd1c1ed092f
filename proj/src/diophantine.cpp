#include "acplus/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "acplus/budget.hpp"
#include "acplus/discmaps.hpp"
#include "acplus/errors.hpp"

namespace acp {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559L;

// dist(x, 2 pi Z)
double angle_dist(long double x) {
  long double r = std::fmod(x, kTwoPiL);
  if (r < 0) r += kTwoPiL;
  return static_cast<double>(std::min(r, kTwoPiL - r));
}

// fractional part mapped to [-1/2, 1/2)
long double centered_frac(long double x) {
  long double f = x - std::floor(x);
  if (f >= 0.5L) f -= 1.0L;
  return f;
}

double verify_worst(const KroneckerQuery& q, double t) {
  double worst = 0.0;
  for (std::size_t i = 0; i < q.frequencies.size(); ++i)
    worst = std::max(worst, angle_dist(static_cast<long double>(t) *
                                           q.frequencies[i] -
                                       q.targets[i]));
  return worst;
}

std::optional<KroneckerHit> verified(const KroneckerQuery& q, double t,
                                     const char* method) {
  if (!(std::abs(t) <= q.t_max)) return std::nullopt;
  const double worst = verify_worst(q, t);
  if (worst <= q.epsilon * (1.0 + 1e-12) + 1e-15)
    return KroneckerHit{t, worst, method};
  return std::nullopt;
}

struct Convergent {
  long long q;
  long double theta;  // q*alpha - p, |theta| decreasing in the list
};

// Continued-fraction convergents p_j/q_j of alpha, reported as the step
// displacements theta_j = q_j*alpha - p_j (signs alternate, |theta_j|
// strictly decreasing).  Stops once |theta| < theta_floor or q > q_cap.
std::vector<Convergent> convergents(long double alpha, long double theta_floor,
                                    long long q_cap) {
  std::vector<Convergent> out;
  long double x = alpha - std::floor(alpha);
  long long p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  long long p_cur = static_cast<long long>(std::floor(alpha));
  long long q_cur = 1;
  out.push_back({1, alpha - p_cur});
  for (int iter = 0; iter < 200; ++iter) {
    if (x == 0.0L) break;  // alpha is rational; list is complete
    x = 1.0L / x;
    const long long a = static_cast<long long>(std::floor(x));
    x -= std::floor(x);
    if (a > (q_cap - q_prev) / std::max<long long>(q_cur, 1)) break;
    const long long p_next = a * p_cur + p_prev;
    const long long q_next = a * q_cur + q_prev;
    const long double theta = q_next * alpha - p_next;
    out.push_back({q_next, theta});
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    if (std::abs(theta) < theta_floor) break;
  }
  return out;
}

// Finds |k| <= k_max with dist(k*alpha - beta, Z) <= eps via Ostrowski-style
// greedy descent on the convergent steps of alpha.
std::optional<long long> ostrowski_solve(long double alpha, long double beta,
                                         long double eps, long long k_max) {
  const std::vector<Convergent> steps =
      convergents(alpha, eps / 8.0L, 4 * k_max);
  long long k = 0;
  long double d = centered_frac(-beta);
  for (int iter = 0; iter < 4000; ++iter) {
    if (std::abs(d) <= eps) return (std::abs(k) <= k_max) ? std::optional(k)
                                                          : std::nullopt;
    bool moved = false;
    // Largest step no bigger than |d| keeps the walk monotone and the
    // accumulated k small (Ostrowski digits).
    for (const Convergent& step : steps) {
      if (std::abs(step.theta) > std::abs(d) || step.theta == 0.0L) continue;
      const long long m =
          static_cast<long long>(std::floor(std::abs(d / step.theta)));
      const long long sgn = (d > 0) == (step.theta > 0) ? -1 : 1;
      k += sgn * m * step.q;
      d += sgn * m * step.theta;
      moved = true;
      break;
    }
    if (!moved) {
      // d sits below the finest available step; one final nudge may land
      // inside the tolerance, otherwise give up.
      const auto& fine = steps.back();
      const long long sgn = (d > 0) == (fine.theta > 0) ? -1 : 1;
      if (std::abs(d + sgn * fine.theta) <= eps) {
        k += sgn * fine.q;
        d += sgn * fine.theta;
        continue;
      }
      return std::nullopt;
    }
    if (std::abs(k) > 8 * k_max) return std::nullopt;
  }
  return std::nullopt;
}

// Direct verified scan over the anchor lattice k = 0, +-1, +-2, ...
std::optional<long long> lattice_scan(const std::vector<long double>& alphas,
                                      const std::vector<long double>& betas,
                                      long double eps, long long k_max,
                                      long long budget) {
  const long long lim = std::min(k_max, budget);
  const std::size_t m = alphas.size();
  std::vector<long double> pos(m), neg(m);
  for (std::size_t i = 0; i < m; ++i) pos[i] = neg[i] = -betas[i];
  auto ok = [&](const std::vector<long double>& d) {
    for (std::size_t i = 0; i < m; ++i)
      if (std::abs(centered_frac(d[i])) > eps) return false;
    return true;
  };
  if (ok(pos)) return 0;
  BudgetTimer timer;
  for (long long k = 1; k <= lim; ++k) {
    if ((k & 0xFFFFF) == 0) timer.check("kronecker lattice scan");
    for (std::size_t i = 0; i < m; ++i) {
      pos[i] += alphas[i];
      neg[i] -= alphas[i];
      if (pos[i] > 0.5L) pos[i] -= std::floor(pos[i] + 0.5L);
      if (neg[i] < -0.5L) neg[i] -= std::floor(neg[i] + 0.5L);
    }
    if (ok(pos)) return k;
    if (ok(neg)) return -k;
  }
  return std::nullopt;
}

// ---- small-dimension LLL + Babai for the m >= 3 anchored problem ----

using Vec = std::vector<long double>;

long double dot(const Vec& a, const Vec& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(Vec& y, long double a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void gram_schmidt(const std::vector<Vec>& b, std::vector<Vec>& bstar,
                  std::vector<std::vector<long double>>& mu) {
  const std::size_t n = b.size();
  bstar = b;
  for (std::size_t i = 0; i < n; ++i) {
    bstar[i] = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      const long double denom = dot(bstar[j], bstar[j]);
      mu[i][j] = denom > 0 ? dot(b[i], bstar[j]) / denom : 0.0L;
      axpy(bstar[i], -mu[i][j], bstar[j]);
    }
  }
}

void lll_reduce(std::vector<Vec>& b, std::vector<std::vector<long long>>& coef) {
  const std::size_t n = b.size();
  std::vector<Vec> bstar;
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  gram_schmidt(b, bstar, mu);
  std::size_t k = 1;
  int guard = 0;
  while (k < n && ++guard < 10000) {
    for (std::size_t j = k; j-- > 0;) {
      const long long r = llroundl(mu[k][j]);
      if (r != 0) {
        axpy(b[k], static_cast<long double>(-r), b[j]);
        for (std::size_t i = 0; i < coef[k].size(); ++i)
          coef[k][i] -= r * coef[j][i];
        gram_schmidt(b, bstar, mu);
      }
    }
    const long double lhs = dot(bstar[k], bstar[k]);
    const long double rhs =
        (0.75L - mu[k][k - 1] * mu[k][k - 1]) * dot(bstar[k - 1], bstar[k - 1]);
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(coef[k], coef[k - 1]);
      gram_schmidt(b, bstar, mu);
      k = std::max<std::size_t>(1, k - 1);
    }
  }
}

std::optional<long long> lll_solve(const std::vector<long double>& alphas,
                                   const std::vector<long double>& betas,
                                   long double eps, long long k_max) {
  const std::size_t m = alphas.size();  // number of residual congruences
  const std::size_t dim = m + 1;
  // Coordinates: x_0 = k / k_max, x_i = (k alpha_i - n_i - beta_i) / eps.
  std::vector<Vec> basis(dim, Vec(dim, 0.0L));
  basis[0][0] = 1.0L / static_cast<long double>(k_max);
  for (std::size_t i = 0; i < m; ++i) basis[0][i + 1] = alphas[i] / eps;
  for (std::size_t i = 0; i < m; ++i) basis[i + 1][i + 1] = -1.0L / eps;
  std::vector<std::vector<long long>> coef(dim,
                                           std::vector<long long>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) coef[i][i] = 1;
  lll_reduce(basis, coef);

  Vec target(dim, 0.0L);
  for (std::size_t i = 0; i < m; ++i) target[i + 1] = betas[i] / eps;

  // Babai nearest plane on the reduced basis.
  std::vector<Vec> bstar;
  std::vector<std::vector<long double>> mu(dim, std::vector<long double>(dim, 0));
  gram_schmidt(basis, bstar, mu);
  Vec resid = target;
  std::vector<long long> rounding(dim, 0);
  for (std::size_t i = dim; i-- > 0;) {
    const long double denom = dot(bstar[i], bstar[i]);
    const long long c =
        denom > 0 ? llroundl(dot(resid, bstar[i]) / denom) : 0;
    rounding[i] = c;
    axpy(resid, static_cast<long double>(-c), basis[i]);
  }
  // Enumerate small perturbations around the Babai point and verify.
  std::vector<long long> offs(dim, -1);
  std::optional<long long> best;
  auto consider = [&](const std::vector<long long>& combo) {
    long long k = 0;
    for (std::size_t i = 0; i < dim; ++i)
      k += (rounding[i] + combo[i]) * coef[i][0];
    if (std::abs(k) > k_max) return;
    for (std::size_t i = 0; i < m; ++i)
      if (std::abs(centered_frac(k * alphas[i] - betas[i])) > eps) return;
    if (!best || std::abs(k) < std::abs(*best)) best = k;
  };
  std::vector<long long> combo(dim, 0);
  const long long radius = 2;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == dim) {
      consider(combo);
      return;
    }
    for (long long v = -radius; v <= radius; ++v) {
      combo[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace

void KroneckerQuery::validate() const {
  require(!frequencies.empty(), ErrorCode::precondition,
          "at least one frequency is required");
  require(frequencies.size() == targets.size(), ErrorCode::precondition,
          "frequencies and targets must have equal length");
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    require(std::isfinite(frequencies[i]) && frequencies[i] != 0.0,
            ErrorCode::precondition, "frequencies must be finite and nonzero");
    for (std::size_t j = i + 1; j < frequencies.size(); ++j)
      require(frequencies[i] != frequencies[j], ErrorCode::precondition,
              "frequencies must be pairwise distinct");
  }
  require(epsilon >= 0.0 && epsilon < M_PI, ErrorCode::precondition,
          "epsilon must lie in [0, pi)");
  require(t_max > 0.0, ErrorCode::precondition, "t_max must be positive");
}

std::optional<KroneckerHit> kronecker_search(const KroneckerQuery& q) {
  q.validate();
  const std::size_t m = q.frequencies.size();

  if (auto hit = verified(q, 0.0, "closed-form")) return hit;  // targets ~ 0

  // Anchor the largest-magnitude frequency on its exact lattice
  // t = (tau_a + 2 pi k) / omega_a and solve the residual congruences in k.
  std::size_t a = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (std::abs(q.frequencies[i]) > std::abs(q.frequencies[a])) a = i;
  const long double fa = q.frequencies[a];
  const long double ta = q.targets[a];
  const long long k_max = static_cast<long long>(
      std::floor((static_cast<long double>(q.t_max) * std::abs(fa)) / kTwoPiL));
  auto t_of_k = [&](long long k) {
    return static_cast<double>((ta + kTwoPiL * k) / fa);
  };

  if (m == 1) {
    const long long k0 = llroundl(-ta / kTwoPiL);
    for (long long dk : {0LL, 1LL, -1LL})
      if (auto hit = verified(q, t_of_k(k0 + dk), "closed-form")) return hit;
    return std::nullopt;
  }

  std::vector<long double> alphas, betas;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == a) continue;
    const long double fi = q.frequencies[i];
    alphas.push_back(fi / fa);
    betas.push_back((q.targets[i] - ta * fi / fa) / kTwoPiL);
  }
  const long double eps_frac = static_cast<long double>(q.epsilon) / kTwoPiL;

  if (m == 2) {
    if (auto k = ostrowski_solve(alphas[0], betas[0], eps_frac, k_max))
      if (auto hit = verified(q, t_of_k(*k), "ostrowski")) return hit;
  } else {
    if (auto k = lll_solve(alphas, betas, eps_frac, k_max))
      if (auto hit = verified(q, t_of_k(*k), "lll")) return hit;
  }

  if (auto k = lattice_scan(alphas, betas, eps_frac, k_max, 20000000))
    if (auto hit = verified(q, t_of_k(*k), "scan")) return hit;
  return std::nullopt;
}

std::vector<RecurrencePoint> recurrence_sequence(const Series& phi, cplx w,
                                                 std::vector<double> ladder,
                                                 double t_max) {
  require(phi.exact(), ErrorCode::precondition,
          "recurrence needs an exact two-term series");
  const cplx a2 = phi.coefficient(2);
  const cplx a3 = phi.coefficient(3);
  require(phi.support_size() == 2 && a2 != cplx(0.0) && a3 != cplx(0.0),
          ErrorCode::precondition,
          "recurrence needs support exactly {2, 3}");
  require(!ladder.empty(), ErrorCode::precondition, "tolerance ladder is empty");

  const double r2 = std::abs(a2), r3 = std::abs(a3);
  const double rho = std::abs(w);
  require(rho <= r2 + r3 + 1e-15 && rho >= std::abs(r2 - r3) - 1e-15,
          ErrorCode::precondition,
          "target is outside the reachable annulus of the two-term series");

  std::sort(ladder.begin(), ladder.end(), std::greater<double>());
  const double ln2 = std::log(2.0), ln3 = std::log(3.0);

  std::vector<RecurrencePoint> out;
  for (double rung : ladder) {
    if (rung <= 0.0) {
      // Exact hits exist only when t = 0 already lands on w.
      const cplx at0 = a2 + a3;
      require(at0 == w, ErrorCode::precondition,
              "exact targets are unattainable at finite t; "
              "use a positive tolerance");
      out.push_back({0.0, at0, 0.0, 0.0});
      continue;
    }
    // Two-link angle solve: split w into term2 + term3 with |term_p| = r_p;
    // then t*ln p must approximate Arg a_p - Arg term_p mod 2 pi.
    std::vector<std::pair<double, double>> angle_targets;
    if (rho < 1e-300) {
      const double base = std::arg(a2);
      angle_targets.push_back({0.0, std::arg(a3) - base - M_PI});
    } else {
      const double c2 =
          std::clamp((rho * rho + r2 * r2 - r3 * r3) / (2.0 * rho * r2), -1.0,
                     1.0);
      const double gamma = std::acos(c2);
      for (double sign : {+1.0, -1.0}) {
        const cplx term2 = std::polar(r2, std::arg(w) + sign * gamma);
        const cplx term3 = w - term2;
        angle_targets.push_back({std::arg(a2) - std::arg(term2),
                                 std::arg(a3) - std::arg(term3)});
        if (gamma == 0.0) break;
      }
    }
    bool done = false;
    for (const auto& [tau2, tau3] : angle_targets) {
      double eps_angle = rung / (r2 + r3);
      for (int attempt = 0; attempt < 3 && !done; ++attempt) {
        KroneckerQuery query{{ln2, ln3}, {tau2, tau3}, eps_angle, t_max};
        if (auto hit = kronecker_search(query)) {
          const cplx val = phi.evaluate(cplx(0.0, hit->t)).value;
          const double err = std::abs(val - w);
          if (err <= rung) {
            out.push_back({hit->t, val, err, rung});
            done = true;
            break;
          }
        }
        eps_angle *= 0.5;
      }
      if (done) break;
    }
    if (!done)
      throw Error(ErrorCode::not_found,
                  "search budget exhausted before reaching the tolerance "
                  "ladder rung");
  }
  return out;
}

std::vector<WitnessPair> witness_pairs(double delta, int count, double t_max) {
  require(delta > 0.0 && delta <= 0.1, ErrorCode::precondition,
          "delta must lie in (0, 0.1]");
  require(count >= 1, ErrorCode::precondition, "count must be >= 1");

  const Series phi({{2, 0.5}, {3, -0.5}}, 3);
  const DiscMap F{DiscMapKind::log_phase_cayley};
  auto g = [](double x) {  // |phi| ceiling at Re s = x
    return 0.5 * (std::pow(2.0, -x) + std::pow(3.0, -x));
  };
  auto mod_T = [](cplx z) { return std::abs((1.0 + z) / (1.0 - z)); };

  const double e_pi = std::exp(M_PI);
  // |T(phi(s_n))| large enough that the horizontal shift solving
  // g(eps) = 1 - 2 e^pi / |T| stays below delta.
  const double need_T = 2.0 * e_pi / (1.0 - g(delta)) * 1.05;
  const double radius = 2.0 / (need_T + 1.0);  // |1 - phi(s_n)| budget

  // Interior offset h = min(delta/2, 2^-j) small enough to spend at most
  // half the budget; the rest goes to the angular approximation.
  int j = 1;
  while (std::min(delta / 2.0, std::pow(2.0, -j)) * std::log(6.0) / 2.0 >
         radius / 2.0)
    ++j;

  std::vector<WitnessPair> out;
  BudgetTimer timer;
  for (int produced = 0; produced < count; ++j) {
    timer.check("witness search");
    require(j <= 60, ErrorCode::not_found,
            "witness budget exhausted before certification");
    const double h = std::min(delta / 2.0, std::pow(2.0, -j));
    const double shift_loss = 1.0 - g(h);
    const double ang_budget = radius - shift_loss;
    if (ang_budget <= 0.0) continue;

    std::vector<RecurrencePoint> pts;
    try {
      pts = recurrence_sequence(phi, cplx(1.0), {ang_budget}, t_max);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::not_found) continue;
      throw;
    }
    const double t = pts.front().t;
    const cplx s1(h, t);
    const cplx z = phi.evaluate(s1).value;
    const double tz = mod_T(z);
    if (!(tz * 1.05 >= need_T)) continue;  // not deep enough; tighten

    // Horizontal reach eps_n: g(eps) = 1 - 2 e^pi / |T(z)| (monotone).
    const double target_g = 1.0 - 2.0 * e_pi / tz;
    double lo = 0.0, hi = delta;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * delta; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) > target_g ? lo : hi) = mid;
    }
    const double eps_n = hi;

    // Bisect along the horizontal segment for |T(z)/T(phi(s1+x))| = e^pi.
    auto log_ratio = [&](double x) {
      return std::log(tz / mod_T(phi.evaluate(s1 + cplx(x, 0.0)).value)) -
             M_PI;
    };
    double xlo = 0.0, xhi = eps_n;
    if (!(log_ratio(xhi) >= 0.0)) continue;  // reach check failed; tighten
    double flo = log_ratio(xlo);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (xlo + xhi);
      const double fm = log_ratio(mid);
      if (std::abs(fm) <= 5e-7) {
        xlo = xhi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        xlo = mid;
        flo = fm;
      } else {
        xhi = mid;
      }
      if (xhi - xlo < 1e-18) break;
    }
    const double x = 0.5 * (xlo + xhi);
    if (std::abs(log_ratio(x)) > 1e-6) continue;

    const cplx s2 = s1 + cplx(x, 0.0);
    const cplx F1 = F.value(phi.evaluate(s1).value);
    const cplx F2 = F.value(phi.evaluate(s2).value);
    WitnessPair pair;
    pair.s1 = s1;
    pair.s2 = s2;
    pair.gap = std::abs(s1 - s2);
    pair.value_gap = std::abs(F1 - F2);
    double d = std::fmod(std::abs(std::arg(F1) - std::arg(F2)), 2.0 * M_PI);
    pair.arg_gap = std::min(d, 2.0 * M_PI - d);
    const double floor_gap = 2.0 * std::exp(-M_PI / 2.0) - 1e-3;
    if (pair.gap <= delta && pair.value_gap >= floor_gap &&
        std::abs(pair.arg_gap - M_PI) <= 1e-6) {
      out.push_back(pair);
      ++produced;
    }
  }
  return out;
}

}  // namespace acp
