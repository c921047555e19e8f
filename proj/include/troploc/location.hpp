#pragma once

#include <optional>
#include <string>
#include <vector>

#include "troploc/linalg.hpp"

namespace troploc {

/// Minimax single-facility location instance under Chebyshev distance:
/// minimize over x the largest rho(r_i, x) + w_i, optionally subject to
/// per-point distance caps rho(r_i, x) <= d_i.
struct LocationInstance {
  std::size_t dimension = 0;
  // m points, each of length dimension.
  std::vector<std::vector<double>> points;
  // One additive weight per point; empty means all zero.
  std::vector<double> weights;
  std::optional<std::vector<double>> caps;

  // Throws InvalidInstance with a message naming the offending field.
  void validate() const;
  std::size_t point_count() const { return points.size(); }
  double weight(std::size_t j) const {
    return weights.empty() ? 0.0 : weights[j];
  }
};

/// The two envelope vectors of an instance:
///   p_i = max_j (r_ij + w_j),  q_i = min_j (r_ij - w_j).
struct PQPair {
  std::vector<double> p;
  std::vector<double> q;
};

enum class SolveStatus { optimal, feasible_optimal, approximate };

const char* to_string(SolveStatus status);

/// Optimal value and the segment of minimizers
/// x(alpha) = alpha*lo + (1-alpha)*hi, alpha in [0,1].
struct LocationSolution {
  double lambda = 0.0;
  std::vector<double> lo;  // x at alpha = 1, equals p - lambda
  std::vector<double> hi;  // x at alpha = 0, equals q + lambda
  SolveStatus status = SolveStatus::optimal;
  // Optimal value of the folded problem; present for constrained runs,
  // zero exactly when the caps are compatible with the optimum.
  std::optional<double> lambda_combined;
};

struct SegmentSample {
  double alpha;
  std::vector<double> point;
  double objective;
};

/// Chebyshev (L-infinity) distance max_i |r_i - s_i|.
double chebyshev(const std::vector<double>& r, const std::vector<double>& s);

/// max_i (chebyshev(r_i, x) + w_i).
double objective(const LocationInstance& inst, const std::vector<double>& x);

PQPair build_pq(const LocationInstance& inst);

/// The (n+1) x (n+1) irreducible matrix [[bottom, q^-], [p, bottom]]
/// whose eigenvalue is the optimal objective value.
TropMatrix block_matrix(const PQPair& pq);

/// Closed form: lambda = max_i (p_i - q_i)/2, minimizers on the segment
/// from p - lambda to q + lambda.  Caps are ignored.
LocationSolution solve_unconstrained(const LocationInstance& inst);

/// Same solution recomputed through the block-matrix spectral reduction;
/// kept as an independent cross-check of the closed form.
LocationSolution solve_via_spectral(const LocationInstance& inst);

/// Folds the distance caps into the objective.  When the folded optimum
/// lambda_c is zero (within tolerance) the returned segment solves the
/// constrained problem exactly; otherwise the segment minimizes the folded
/// objective only and status is approximate, with the reported lambda
/// recomputed at the segment midpoint.
LocationSolution solve_constrained(const LocationInstance& inst);

std::vector<double> point_at(const LocationSolution& sol, double alpha);

/// True iff chebyshev(r_i, x) <= d_i (within tolerance) for every i.
bool check_feasible(const LocationInstance& inst,
                    const std::vector<double>& x);

/// count+1 evenly spaced samples alpha = 0, 1/count, ..., 1, each with the
/// objective evaluated directly at the sampled point.
std::vector<SegmentSample> sample_segment(const LocationInstance& inst,
                                          const LocationSolution& sol,
                                          std::size_t count);

}  // namespace troploc
