#pragma once

#include <vector>

#include "troploc/linalg.hpp"
#include "troploc/location.hpp"

namespace troploc::oracle {

/// Bounding box and spacing for the exhaustive grid search.
struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  double step = 0.0;
};

struct GridMinimum {
  double value;
  std::vector<double> argmin;
};

/// Box covering the instance inflated by max|w| + 1 per coordinate; the
/// objective grows linearly outside the point cloud, so the box always
/// contains a minimizer (the segment midpoint).
GridSpec default_grid(const LocationInstance& inst, double step);

/// Maximum over all elementary cycles of (cycle weight)/(cycle length),
/// by exhaustive depth-first enumeration.  Reference for the eigenvalue;
/// capped at n <= 8.
TropScalar max_cycle_mean(const TropMatrix& a);

/// Exhaustive evaluation of the location objective over the grid,
/// skipping cap-violating cells when respect_caps is set.  Deterministic:
/// ties keep the lexicographically smallest grid index.
GridMinimum grid_min_objective(const LocationInstance& inst,
                               const GridSpec& grid, bool respect_caps);

/// Whether y lies in the tropical span of the columns of x: computes the
/// principal coefficients c_k = min_i (y_i - x_ik) and checks that the
/// combination reproduces y.
bool span_membership(const TropVector& y, const TropMatrix& x);

}  // namespace troploc::oracle
