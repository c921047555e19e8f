#include "troploc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "troploc/spectral.hpp"

namespace troploc::oracle {

namespace {

constexpr std::size_t kMaxCycleNodes = 8;
constexpr std::size_t kMaxGridCells = 10'000'000;

// Depth-first enumeration of the elementary cycles whose smallest vertex
// is `start`; path holds the current simple path from `start`.
void search_cycles(const TropMatrix& a, std::size_t start, std::size_t v,
                   double weight, std::vector<char>& on_path,
                   std::size_t path_len, double& best) {
  const std::size_t n = a.rows();
  for (std::size_t w = start; w < n; ++w) {
    const TropScalar edge = a(v, w);
    if (edge.is_bottom()) continue;
    if (w == start) {
      best = std::max(best,
                      (weight + edge.value()) / static_cast<double>(path_len));
    } else if (!on_path[w]) {
      on_path[w] = 1;
      search_cycles(a, start, w, weight + edge.value(), on_path, path_len + 1,
                    best);
      on_path[w] = 0;
    }
  }
}

}  // namespace

GridSpec default_grid(const LocationInstance& inst, double step) {
  inst.validate();
  double max_w = 0.0;
  for (std::size_t j = 0; j < inst.point_count(); ++j)
    max_w = std::max(max_w, std::abs(inst.weight(j)));
  const double margin = max_w + 1.0;

  GridSpec grid;
  grid.step = step;
  grid.lower.resize(inst.dimension);
  grid.upper.resize(inst.dimension);
  for (std::size_t i = 0; i < inst.dimension; ++i) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < inst.point_count(); ++j) {
      lo = std::min(lo, inst.points[j][i]);
      hi = std::max(hi, inst.points[j][i]);
    }
    grid.lower[i] = lo - margin;
    grid.upper[i] = hi + margin;
  }
  return grid;
}

TropScalar max_cycle_mean(const TropMatrix& a) {
  if (!a.is_square()) throw NonSquare("cycle mean of a non-square matrix");
  if (a.rows() > kMaxCycleNodes)
    throw TooLarge("cycle enumeration capped at 8 nodes");
  if (!is_irreducible(a)) throw Reducible("matrix is reducible");

  const std::size_t n = a.rows();
  double best = -std::numeric_limits<double>::infinity();
  std::vector<char> on_path(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    on_path.assign(n, 0);
    on_path[s] = 1;
    search_cycles(a, s, s, 0.0, on_path, 1, best);
  }
  return TropScalar(best);
}

GridMinimum grid_min_objective(const LocationInstance& inst,
                               const GridSpec& grid, bool respect_caps) {
  inst.validate();
  if (respect_caps && !inst.caps) throw MissingCaps("instance has no caps");
  const std::size_t n = inst.dimension;
  if (grid.lower.size() != n || grid.upper.size() != n)
    throw DimensionMismatch("grid box of unexpected dimension");
  if (!(grid.step > 0.0)) throw InvalidValue("grid step must be positive");

  std::vector<std::size_t> counts(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid.lower[i] > grid.upper[i])
      throw InvalidValue("grid box is empty");
    const double span = (grid.upper[i] - grid.lower[i]) / grid.step;
    counts[i] = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    if (counts[i] > kMaxGridCells / total)
      throw TooLarge("grid exceeds the cell budget");
    total *= counts[i];
  }

  std::vector<std::size_t> index(n, 0);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = grid.lower[i];

  GridMinimum best{std::numeric_limits<double>::infinity(), {}};
  bool found = false;
  for (std::size_t cell = 0; cell < total; ++cell) {
    bool feasible = true;
    if (respect_caps) {
      for (std::size_t j = 0; j < inst.point_count() && feasible; ++j)
        feasible = chebyshev(inst.points[j], x) <=
                   (*inst.caps)[j] + tolerance();
    }
    if (feasible) {
      const double value = objective(inst, x);
      if (!found || value < best.value) {
        best.value = value;
        best.argmin = x;
        found = true;
      }
    }
    // Advance the mixed-radix counter, last coordinate fastest.
    for (std::size_t i = n; i-- > 0;) {
      if (++index[i] < counts[i]) {
        x[i] = grid.lower[i] + static_cast<double>(index[i]) * grid.step;
        break;
      }
      index[i] = 0;
      x[i] = grid.lower[i];
    }
  }
  if (!found) throw EmptyFeasibleGrid("no grid cell satisfies the caps");
  return best;
}

bool span_membership(const TropVector& y, const TropMatrix& x) {
  if (y.size() != x.rows())
    throw DimensionMismatch("vector length differs from column length");
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i].is_bottom()) throw BottomEntry("span test needs finite entries");

  TropVector combo(y.size());
  for (std::size_t k = 0; k < x.cols(); ++k) {
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (x(i, k).is_bottom())
        throw BottomEntry("span test needs finite entries");
      c = std::min(c, y[i].value() - x(i, k).value());
    }
    combo = combo + TropScalar(c) * x.column(k);
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    if (std::abs(combo[i].value() - y[i].value()) > tolerance()) return false;
  return true;
}

}  // namespace troploc::oracle
