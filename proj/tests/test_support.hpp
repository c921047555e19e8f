#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "troploc/linalg.hpp"
#include "troploc/location.hpp"

namespace testsup {

using troploc::LocationInstance;
using troploc::TropMatrix;
using troploc::TropScalar;
using troploc::TropVector;

inline constexpr double kBottom = -std::numeric_limits<double>::infinity();

using Rng = std::mt19937_64;

// Uniform draw snapped to the 1/1024 grid, so sums and maxes of a handful
// of values stay exact in double precision.
inline double dyadic(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return std::round(dist(rng) * 1024.0) / 1024.0;
}

inline double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

// Random irreducible matrix: a random Hamiltonian cycle keeps the support
// digraph strongly connected while other entries drop to bottom with the
// given probability.
inline TropMatrix random_irreducible(Rng& rng, std::size_t n,
                                     double bottom_prob = 0.5,
                                     double lo = -10.0, double hi = 10.0) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng) >= bottom_prob) a(i, j) = TropScalar(dyadic(rng, lo, hi));
  for (std::size_t k = 0; k < n; ++k)
    a(perm[k], perm[(k + 1) % n]) = TropScalar(dyadic(rng, lo, hi));
  return a;
}

inline TropVector random_finite_vector(Rng& rng, std::size_t n,
                                       double lo = -10.0, double hi = 10.0) {
  TropVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = TropScalar(dyadic(rng, lo, hi));
  return x;
}

inline LocationInstance random_instance(Rng& rng, std::size_t n, std::size_t m,
                                        double coord_range, double w_range) {
  LocationInstance inst;
  inst.dimension = n;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> point(n);
    for (std::size_t i = 0; i < n; ++i)
      point[i] = dyadic(rng, -coord_range, coord_range);
    inst.points.push_back(std::move(point));
  }
  inst.weights.resize(m);
  for (std::size_t j = 0; j < m; ++j)
    inst.weights[j] = dyadic(rng, -w_range, w_range);
  return inst;
}

inline double max_abs_gap(const TropMatrix& a, const TropMatrix& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double x = a(i, j).value();
      const double y = b(i, j).value();
      if (std::isinf(x) && std::isinf(y)) continue;
      gap = std::max(gap, std::abs(x - y));
    }
  return gap;
}

}  // namespace testsup
