#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "troploc/io.hpp"
#include "troploc/location.hpp"
#include "troploc/oracle.hpp"
#include "troploc/spectral.hpp"

namespace {

using namespace troploc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitApproximate = 2;
constexpr int kExitMismatch = 3;

// Self-check before emission: the endpoints must be ordered and, unless
// the solution is approximate, every sampled objective must sit on the
// reported optimum.
void validate_output(const LocationInstance& inst, const LocationSolution& sol,
                     const std::vector<SegmentSample>& samples) {
  for (std::size_t i = 0; i < sol.lo.size(); ++i)
    if (sol.lo[i] > sol.hi[i])
      throw TropError("internal: segment endpoints out of order");
  if (sol.status == SolveStatus::approximate) return;
  for (const SegmentSample& s : samples)
    if (std::abs(s.objective - sol.lambda) > tolerance())
      throw TropError("internal: sampled objective drifts from the optimum");
  for (double alpha : {0.0, 0.5, 1.0})
    if (std::abs(objective(inst, point_at(sol, alpha)) - sol.lambda) >
        tolerance())
      throw TropError("internal: segment point misses the optimum");
}

int run_solve(const std::string& path, int sample_count) {
  const LocationInstance inst = io::load_instance(path);
  const LocationSolution sol =
      inst.caps ? solve_constrained(inst) : solve_unconstrained(inst);

  std::vector<SegmentSample> samples;
  const bool with_samples = sample_count >= 0;
  if (with_samples)
    samples = sample_segment(inst, sol, static_cast<std::size_t>(sample_count));
  validate_output(inst, sol, samples);
  std::cout << io::solution_json(sol, with_samples ? &samples : nullptr);
  return sol.status == SolveStatus::approximate ? kExitApproximate : kExitOk;
}

int run_eigen(const std::string& path, bool include_cross) {
  const TropMatrix a = io::load_matrix(path);
  const SpectralResult result = eigenvector_basis(a);
  std::cout << io::spectral_json(result, include_cross);
  return kExitOk;
}

int run_sample(const std::string& path, int count, bool bare_csv) {
  const LocationInstance inst = io::load_instance(path);
  const LocationSolution sol =
      inst.caps ? solve_constrained(inst) : solve_unconstrained(inst);
  const auto samples =
      sample_segment(inst, sol, static_cast<std::size_t>(count));
  std::cout << io::samples_csv(samples, /*header=*/!bare_csv);
  return sol.status == SolveStatus::approximate ? kExitApproximate : kExitOk;
}

// Cross-checks the closed form against the spectral reduction, the cycle
// mean of the block matrix, and the grid search; with caps, additionally
// checks the feasibility classification against the capped grid.
int run_check(const std::string& path, double step) {
  const LocationInstance inst = io::load_instance(path);
  const double eps = tolerance();
  const double grid_bound = static_cast<double>(inst.dimension) * step;

  const LocationSolution sol = solve_unconstrained(inst);
  const TropMatrix block = block_matrix(build_pq(inst));
  const double lambda_block = eigenvalue(block).value();
  const double lambda_cycle = oracle::max_cycle_mean(block).value();
  const auto grid =
      oracle::grid_min_objective(inst, oracle::default_grid(inst, step), false);

  const double eigen_gap = std::abs(sol.lambda - lambda_block);
  const double cycle_gap = std::abs(sol.lambda - lambda_cycle);
  const double grid_gap = std::abs(sol.lambda - grid.value);

  std::cout << "closed_form_lambda: " << io::format_number(sol.lambda) << '\n'
            << "block_eigenvalue: " << io::format_number(lambda_block) << '\n'
            << "cycle_mean: " << io::format_number(lambda_cycle) << '\n'
            << "grid_minimum: " << io::format_number(grid.value) << '\n'
            << "eigen_gap: " << io::format_number(eigen_gap) << '\n'
            << "cycle_gap: " << io::format_number(cycle_gap) << '\n'
            << "grid_gap: " << io::format_number(grid_gap) << '\n'
            << "grid_bound: " << io::format_number(grid_bound) << '\n';

  bool ok = eigen_gap <= eps && cycle_gap <= eps && grid_gap <= grid_bound;

  if (inst.caps) {
    const LocationSolution capped = solve_constrained(inst);
    bool grid_hits_optimum = false;
    try {
      const auto feasible = oracle::grid_min_objective(
          inst, oracle::default_grid(inst, step), true);
      grid_hits_optimum = feasible.value <= sol.lambda + grid_bound;
      std::cout << "grid_feasible_minimum: "
                << io::format_number(feasible.value) << '\n';
    } catch (const EmptyFeasibleGrid&) {
      std::cout << "grid_feasible_minimum: none\n";
    }
    const bool claims_optimal =
        capped.status == SolveStatus::feasible_optimal;
    std::cout << "constrained_status: " << to_string(capped.status) << '\n'
              << "classification_consistent: "
              << (claims_optimal == grid_hits_optimum ? "yes" : "no") << '\n';
    ok = ok && claims_optimal == grid_hits_optimum;
  }

  std::cout << "verdict: " << (ok ? "ok" : "mismatch") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-plus spectral solver for minimax Chebyshev location"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string matrix_path;
  double tol = tolerance();
  int solve_samples = -1;
  bool cross = false;
  double step = 0.05;
  int count = 10;
  bool bare_csv = false;

  auto* solve = app.add_subcommand("solve", "solve a location instance");
  solve->add_option("input", instance_path, "instance JSON file")->required();
  solve->add_option("--samples", solve_samples,
                    "append K+1 evenly spaced segment samples")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--tolerance", tol, "comparison tolerance");

  auto* eigen = app.add_subcommand("eigen", "eigenvalue and eigenvectors");
  eigen->add_option("input", matrix_path, "matrix JSON file")->required();
  eigen->add_flag("--cross", cross, "also print the closure matrix");
  eigen->add_option("--tolerance", tol, "comparison tolerance");

  auto* check = app.add_subcommand("check", "verify against brute force");
  check->add_option("input", instance_path, "instance JSON file")->required();
  check->add_option("--step", step, "grid resolution")
      ->check(CLI::PositiveNumber);
  check->add_option("--tolerance", tol, "comparison tolerance");

  auto* sample = app.add_subcommand("sample", "CSV samples of the segment");
  sample->add_option("input", instance_path, "instance JSON file")->required();
  sample->add_option("--count", count, "number of segment steps")
      ->check(CLI::NonNegativeNumber);
  sample->add_flag("--csv", bare_csv, "omit the CSV header row");
  sample->add_option("--tolerance", tol, "comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  tolerance() = tol;
  try {
    if (*solve) return run_solve(instance_path, solve_samples);
    if (*eigen) return run_eigen(matrix_path, cross);
    if (*check) return run_check(instance_path, step);
    if (*sample) return run_sample(instance_path, count, bare_csv);
  } catch (const Reducible&) {
    std::cerr << "matrix is reducible\n";
    return kExitUsage;
  } catch (const TropError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
