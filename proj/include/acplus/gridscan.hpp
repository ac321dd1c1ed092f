#pragma once
// Half-plane sampling regions.  A RegionSpec describes the truncated region
// A_M = {0 < Re Phi < M} probes operate on and the sampling resolution:
// sigma runs down a geometric ladder (denser towards the boundary), t runs
// uniformly over [-t_window, t_window] (or one imaginary period when the
// sampled object is periodic).

#include <functional>
#include <optional>
#include <vector>

#include "acplus/complexutil.hpp"
#include "acplus/errors.hpp"

namespace acp {

struct RegionSpec {
  double m = 3.0;          // A_M band cut-off on Re Phi
  double sigma_max = 2.0;  // right edge of the sigma ladder
  double t_window = 10.0;  // half-width of the imaginary window
  double grid_step = 1e-2; // uniform t step; also sets the sigma-ladder floor

  void validate() const {
    require_pre(m > 0 && sigma_max > 0 && t_window > 0 && grid_step > 0,
                "region parameters must be positive");
    require_pre(grid_step < sigma_max, "grid step must be below sigma_max");
  }
};

// Geometric ladder sigma_max, sigma_max/2, ... down to grid_step/8 (floored
// at 1e-6), always at least two levels.
std::vector<double> sigma_ladder(const RegionSpec& region);

// Uniform t grid; when a period is supplied the window shrinks to one period
// strip centred on t = 0 (almost-periodicity makes wider windows redundant).
std::vector<double> t_grid(const RegionSpec& region,
                           std::optional<double> period);

// Row-major (sigma-major, then t) traversal of the region grid.
void for_each_grid_point(const RegionSpec& region, std::optional<double> period,
                         const std::function<void(cplx)>& fn);

// Golden-section minimisation of a 1-D function on [a, b] to the given
// x-tolerance; returns (argmin, value).
std::pair<double, double> golden_min(const std::function<double(double)>& fn,
                                     double a, double b, double xtol = 1e-6);

}  // namespace acp
