#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "troploc/oracle.hpp"
#include "troploc/spectral.hpp"

using namespace troploc;
using testsup::kBottom;

TEST_CASE("cycle mean enumeration on small matrices") {
  const TropMatrix dense{{0, 1}, {2, 0}};
  CHECK(oracle::max_cycle_mean(dense).value() == 1.5);
  CHECK(oracle::max_cycle_mean(TropMatrix::identity(1)).value() == 0);

  const TropMatrix block = block_matrix({{4, 2}, {0, 0}});
  CHECK(oracle::max_cycle_mean(block).value() == 2);

  const TropMatrix upper{{0, 1}, {kBottom, 0}};
  CHECK_THROWS_AS(oracle::max_cycle_mean(upper), Reducible);
  CHECK_THROWS_AS(oracle::max_cycle_mean(TropMatrix(9, 9)), TooLarge);
}

TEST_CASE("cycle mean agrees with the eigenvalue on a random corpus") {
  testsup::Rng rng(1234);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t n = 2 + iter % 5;
    const TropMatrix a = testsup::random_irreducible(rng, n);
    CHECK(std::abs(oracle::max_cycle_mean(a).value() -
                   eigenvalue(a).value()) <= 1e-9);
  }
}

TEST_CASE("grid search brackets the closed-form optimum") {
  LocationInstance inst;
  inst.dimension = 2;
  inst.points = {{0, 0}, {4, 2}};
  const auto grid = oracle::default_grid(inst, 0.05);
  const auto result = oracle::grid_min_objective(inst, grid, false);
  CHECK(result.value >= 2.0 - 1e-9);
  CHECK(result.value <= 2.0 + 2 * 0.05);
  // The argmin lies on the optimal segment x1=2, 0<=x2<=2.
  CHECK(std::abs(result.argmin[0] - 2.0) <= 0.05 + 1e-9);
  CHECK(result.argmin[1] >= -0.05 - 1e-9);
  CHECK(result.argmin[1] <= 2.05 + 1e-9);
}

TEST_CASE("grid search on coincident points finds zero") {
  LocationInstance inst;
  inst.dimension = 2;
  inst.points = {{1, 1}, {1, 1}};
  const auto result =
      oracle::grid_min_objective(inst, oracle::default_grid(inst, 0.05), false);
  CHECK(result.value <= 0.1);
}

TEST_CASE("capped grid search reports an empty feasible set") {
  LocationInstance inst;
  inst.dimension = 2;
  inst.points = {{0, 0}, {4, 2}};
  inst.caps = std::vector<double>{1, 1};
  CHECK_THROWS_AS(
      oracle::grid_min_objective(inst, oracle::default_grid(inst, 0.05), true),
      EmptyFeasibleGrid);
}

TEST_CASE("grid cell budget is enforced") {
  LocationInstance inst;
  inst.dimension = 5;
  inst.points = {{0, 0, 0, 0, 0}, {4, 2, 4, 2, 4}};
  CHECK_THROWS_AS(
      oracle::grid_min_objective(inst, oracle::default_grid(inst, 0.05), false),
      TooLarge);
}

TEST_CASE("span membership accepts combinations and rejects bumps") {
  testsup::Rng rng(555);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 2 + iter % 4;
    const TropVector x1 = testsup::random_finite_vector(rng, n);
    const TropVector x2 = testsup::random_finite_vector(rng, n);
    const TropMatrix x = TropMatrix::from_columns({x1, x2});

    const TropVector scaled = TropScalar(testsup::dyadic(rng, -4, 4)) * x1;
    CHECK(oracle::span_membership(scaled, x));

    const TropVector combined =
        TropScalar(testsup::dyadic(rng, -4, 4)) * x1 +
        TropScalar(testsup::dyadic(rng, -4, 4)) * x2;
    CHECK(oracle::span_membership(combined, x));

    // Raising one coordinate above anything achievable leaves the span:
    // with the other coordinates held at y, no generator can contribute
    // more than min_{i != k} (y_i - x_ji) + x_jk at coordinate k.
    TropVector bumped = combined;
    const std::size_t k = iter % n;
    double achievable = kBottom;
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double slack = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i)
        if (i != k)
          slack = std::min(slack, combined[i].value() - x(i, j).value());
      achievable = std::max(achievable, slack + x(k, j).value());
    }
    bumped[k] = TropScalar(std::max(bumped[k].value(), achievable) + 1.0);
    CHECK_FALSE(oracle::span_membership(bumped, x));

    // Membership is monotone in the generating set.
    const TropMatrix wider =
        TropMatrix::from_columns({x1, x2, testsup::random_finite_vector(rng, n)});
    CHECK(oracle::span_membership(combined, wider));
  }
}
