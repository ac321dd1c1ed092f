#include "acplus/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "acplus/errors.hpp"

namespace acp {

Symbol::Symbol(int characteristic, Series phi)
    : c_(characteristic), series_(std::move(phi)) {
  require_pre(c_ >= 0, "characteristic must be a non-negative integer");
  validate_self_map();
}

Symbol::Symbol(int characteristic, MapPart part)
    : c_(characteristic), map_(std::move(part)) {
  require_pre(c_ >= 0, "characteristic must be a non-negative integer");
  validate_self_map();
}

const Series& Symbol::series_part() const {
  require_pre(series_.has_value(), "symbol is not series-backed");
  return *series_;
}

const MapPart& Symbol::map_part() const {
  require_pre(map_.has_value(), "symbol is not map-backed");
  return *map_;
}

cplx Symbol::fringe(cplx s) const {
  if (series_) return series_->evaluate(s).value;
  cplx z = map_->inner.evaluate(s).value;
  return map_->map.value(z) + map_->offset;
}

cplx Symbol::evaluate(cplx s) const {
  require_pre(s.real() > 0.0, "symbol evaluation requires Re s > 0");
  return static_cast<double>(c_) * s + fringe(s);
}

std::optional<double> Symbol::period() const {
  const Series& inner = series_ ? *series_ : map_->inner;
  index_t base = 0;
  for (const auto& [n, a] : inner.coeffs()) {
    (void)a;
    if (n == 1) continue;
    if (base == 0) base = n;
  }
  if (base == 0) return std::nullopt;  // constant fringe
  // every non-constant index must be a power of `base`
  for (const auto& [n, a] : inner.coeffs()) {
    (void)a;
    if (n == 1) continue;
    index_t v = n;
    while (v % base == 0) v /= base;
    if (v != 1) return std::nullopt;
  }
  return 2.0 * 3.14159265358979323846 / std::log(static_cast<double>(base));
}

void Symbol::validate_self_map() {
  RegionSpec region;
  region.m = 1e12;
  region.sigma_max = 2.0;
  region.t_window = 8.0;
  region.grid_step = 0.02;
  validation_.region = region;
  double best = std::numeric_limits<double>::infinity();
  cplx argmin;
  for_each_grid_point(region, period(), [&](cplx s) {
    cplx v = static_cast<double>(c_) * s + fringe(s);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return;
    if (v.real() < best) {
      best = v.real();
      argmin = s;
    }
  });
  validation_.re_min = best;
  validation_.argmin = argmin;
}

Symbol Symbol::translate(double h) const {
  require_pre(h >= 0.0, "translate shift must be >= 0");
  const cplx shift = static_cast<double>(c_) * h;
  if (series_) {
    Series t = series_->translate(h);
    Series merged = add(t, Series::constant(shift, t.truncation()));
    return Symbol(c_, merged);
  }
  MapPart part = *map_;
  part.inner = part.inner.translate(h);
  part.offset += shift;
  return Symbol(c_, part);
}

Symbol Symbol::builtin(const std::string& name) {
  if (name == "example1_not_GA") {
    MapPart part{DiscMap{DiscMapKind::singular_inner_plus_one},
                 Series::monomial(2, 1.0)};
    return Symbol(0, part);
  }
  if (name == "example2_GA_not_UC") {
    MapPart part{DiscMap{DiscMapKind::half_strip}, Series::monomial(2, 1.0)};
    return Symbol(0, part);
  }
  if (name == "prop_algebrab_phi") {
    return Symbol(0, Series({{2, 0.5}, {3, -0.5}}, 3));
  }
  if (name == "prop_algebrab_F") {
    MapPart part{DiscMap{DiscMapKind::log_phase_cayley},
                 Series({{2, 0.5}, {3, -0.5}}, 3)};
    return Symbol(0, part);
  }
  throw Error(ErrorCode::usage, "unknown builtin symbol: " + name);
}

namespace {

struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  cplx argmin;
  // sigma bracket around the minimising ladder level, for descent
  double sigma_lo = 0.0, sigma_hi = 0.0;
};

GridMin grid_min_re(const Symbol& phi, const RegionSpec& region) {
  auto sigmas = sigma_ladder(region);
  auto ts = t_grid(region, phi.period());
  GridMin best;
  std::size_t best_level = 0;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    for (double t : ts) {
      cplx s(sigmas[i], t);
      cplx v = static_cast<double>(phi.characteristic()) * s + phi.fringe(s);
      if (!std::isfinite(v.real())) continue;
      if (v.real() < best.value) {
        best.value = v.real();
        best.argmin = s;
        best_level = i;
      }
    }
  }
  if (std::isfinite(best.value)) {
    best.sigma_hi = best_level == 0 ? region.sigma_max * 2.0
                                    : sigmas[best_level - 1];
    best.sigma_lo = best_level + 1 < sigmas.size() ? sigmas[best_level + 1] : 1e-9;
  }
  return best;
}

}  // namespace

MembershipReport classify_G_infty(const Symbol& phi, const RegionSpec& region) {
  GridMin gm = grid_min_re(phi, region);
  MembershipReport rep;
  rep.grid_min = gm.value;
  rep.in_class = gm.value > -1e-12;
  if (!rep.in_class) rep.counterexample = PointWitness{gm.argmin, gm.value};
  return rep;
}

MembershipReport classify_G(const Symbol& phi, const RegionSpec& region) {
  MembershipReport ginf = classify_G_infty(phi, region);
  MembershipReport rep;
  rep.grid_min = ginf.grid_min;
  if (!ginf.in_class) {
    rep.in_class = false;
    rep.counterexample = ginf.counterexample;
    return rep;
  }
  if (phi.characteristic() >= 1) {
    rep.in_class = true;
    return rep;
  }
  rep.in_class = ginf.grid_min >= 0.5;
  if (!rep.in_class) {
    GridMin gm = grid_min_re(phi, region);
    rep.counterexample = PointWitness{gm.argmin, gm.value};
  }
  return rep;
}

ContinuityProbe probe_G_A(const Symbol& phi, const RegionSpec& region,
                          std::vector<double> deltas, double threshold) {
  region.validate();
  require_pre(!deltas.empty(), "probe needs at least one delta");
  for (double d : deltas) require_pre(d > 0.0, "probe deltas must be positive");
  std::sort(deltas.rbegin(), deltas.rend());  // descending

  ContinuityProbe probe;
  probe.region = region;
  probe.deltas = deltas;
  probe.threshold = threshold;

  // Sample and filter to the band A_M.
  struct Pt {
    cplx s, v;
  };
  std::vector<Pt> pts;
  auto sigmas = sigma_ladder(region);
  auto ts = t_grid(region, phi.period());
  for (double sg : sigmas) {
    for (double t : ts) {
      cplx s(sg, t);
      cplx v = static_cast<double>(phi.characteristic()) * s + phi.fringe(s);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
      if (v.real() <= 0.0 || v.real() >= region.m) continue;
      pts.push_back({s, v});
    }
  }
  probe.points_retained = pts.size();

  for (double delta : deltas) {
    const double cell = delta;
    const double pad = delta * (1.0 + 1e-12);
    // cost guard: neighbourhood size grows with delta/grid_step
    double est = static_cast<double>(pts.size()) *
                 (2.0 * delta / region.grid_step + 1.0) *
                 static_cast<double>(sigmas.size());
    require_pre(est < 2e8, "probe pair search too large; shrink delta range "
                           "or coarsen the grid");
    std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
    auto cell_of = [&](double x) {
      return static_cast<std::int64_t>(std::floor(x / cell));
    };
    auto key = [&](std::int64_t ix, std::int64_t iy) {
      return ix * 0x100000001LL + iy;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
      buckets[key(cell_of(pts[i].s.real()), cell_of(pts[i].s.imag()))]
          .push_back(i);

    double omega = 0.0;
    std::optional<ProbePair> worst;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::int64_t ix = cell_of(pts[i].s.real());
      const std::int64_t iy = cell_of(pts[i].s.imag());
      for (int dx = -1; dx <= 1; ++dx) {
        for (int dy = -1; dy <= 1; ++dy) {
          auto it = buckets.find(key(ix + dx, iy + dy));
          if (it == buckets.end()) continue;
          for (std::size_t j : it->second) {
            if (j <= i) continue;
            double gap = std::abs(pts[i].s - pts[j].s);
            if (gap > pad) continue;
            double vg = std::abs(pts[i].v - pts[j].v);
            if (vg > omega) {
              omega = vg;
              worst = ProbePair{pts[i].s, pts[j].s, gap, vg};
            }
          }
        }
      }
    }
    probe.omega.push_back(omega);
    probe.worst_pairs.push_back(worst);
  }
  // verdict against the smallest delta (last after descending sort)
  probe.violated = probe.omega.back() > threshold;
  return probe;
}

CompactnessReport compactness_diagnostic(const Symbol& phi,
                                         const RegionSpec& region) {
  region.validate();
  CompactnessReport rep;
  GridMin gm = grid_min_re(phi, region);
  rep.observed_inf = gm.value;
  rep.argmin = gm.argmin;
  if (std::isfinite(gm.value)) {
    // golden-section descent in sigma along the minimising column
    double t = gm.argmin.imag();
    auto [sg, val] = golden_min(
        [&](double sigma) {
          cplx v = static_cast<double>(phi.characteristic()) * cplx(sigma, t) +
                   phi.fringe(cplx(sigma, t));
          return std::isfinite(v.real()) ? v.real()
                                         : std::numeric_limits<double>::max();
        },
        std::max(gm.sigma_lo, 1e-9), gm.sigma_hi, 1e-6);
    if (val < rep.observed_inf) {
      rep.observed_inf = val;
      rep.argmin = cplx(sg, t);
    }
  }
  if (phi.series_backed()) {
    const Series& f = phi.series_part();
    double bound = f.a1().real() - f.l1_norm(false) -
                   (f.exact() ? 0.0 : f.tail().majorant);
    if (bound > 0.0) {
      rep.compact = true;
      rep.certified = true;
      rep.epsilon = bound;
    }
  }
  return rep;
}

ClassReport classify(const Symbol& phi, const RegionSpec& region,
                     const std::vector<double>& deltas, double threshold) {
  ClassReport rep;
  rep.g_infty = classify_G_infty(phi, region);
  rep.g = classify_G(phi, region);
  rep.ga = probe_G_A(phi, region, deltas, threshold);
  rep.compactness = compactness_diagnostic(phi, region);
  return rep;
}

}  // namespace acp
