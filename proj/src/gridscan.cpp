#include "acplus/gridscan.hpp"

#include <algorithm>
#include <cmath>

namespace acp {

std::vector<double> sigma_ladder(const RegionSpec& region) {
  region.validate();
  double floor_sigma = std::max(region.grid_step / 8.0, 1e-6);
  std::vector<double> out;
  double s = region.sigma_max;
  while (s > floor_sigma) {
    out.push_back(s);
    s *= 0.5;
  }
  out.push_back(std::max(s, floor_sigma));
  if (out.size() < 2) out.push_back(out.back() * 0.5);
  return out;
}

std::vector<double> t_grid(const RegionSpec& region,
                           std::optional<double> period) {
  region.validate();
  double half = region.t_window;
  if (period) half = std::min(half, *period * 0.5 + region.grid_step);
  auto steps = static_cast<long>(std::floor(half / region.grid_step));
  std::vector<double> out;
  out.reserve(2 * steps + 1);
  for (long j = -steps; j <= steps; ++j)
    out.push_back(static_cast<double>(j) * region.grid_step);
  return out;
}

void for_each_grid_point(const RegionSpec& region, std::optional<double> period,
                         const std::function<void(cplx)>& fn) {
  auto sigmas = sigma_ladder(region);
  auto ts = t_grid(region, period);
  for (double sg : sigmas)
    for (double t : ts) fn(cplx(sg, t));
}

std::pair<double, double> golden_min(const std::function<double(double)>& fn,
                                     double a, double b, double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  while (b - a > xtol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, fn(xm)};
}

}  // namespace acp
