#include "troploc/location.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "troploc/spectral.hpp"

namespace troploc {

namespace {

std::string idx(const char* name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

LocationSolution segment_solution(const std::vector<double>& p,
                                  const std::vector<double>& q,
                                  double lambda) {
  LocationSolution sol;
  sol.lambda = lambda;
  sol.lo.resize(p.size());
  sol.hi.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    sol.lo[i] = p[i] - lambda;
    sol.hi[i] = q[i] + lambda;
  }
  return sol;
}

double half_span(const std::vector<double>& p, const std::vector<double>& q) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) best = std::max(best, p[i] - q[i]);
  return best / 2.0;
}

}  // namespace

void LocationInstance::validate() const {
  if (dimension < 1) throw InvalidInstance("dimension must be at least 1");
  if (points.size() < 2)
    throw InvalidInstance("points: need at least 2, got " +
                          std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dimension)
      throw InvalidInstance(idx("points", i) + ": expected " +
                            std::to_string(dimension) + " coordinates, got " +
                            std::to_string(points[i].size()));
    for (std::size_t j = 0; j < points[i].size(); ++j)
      if (!std::isfinite(points[i][j]))
        throw InvalidInstance(idx("points", i) + ": coordinate " +
                              std::to_string(j) + " is not finite");
  }
  if (!weights.empty()) {
    if (weights.size() != points.size())
      throw InvalidInstance("weights: expected " +
                            std::to_string(points.size()) + " entries, got " +
                            std::to_string(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (!std::isfinite(weights[i]))
        throw InvalidInstance(idx("weights", i) + " is not finite");
  }
  if (caps) {
    if (caps->size() != points.size())
      throw InvalidInstance("caps: expected " +
                            std::to_string(points.size()) + " entries, got " +
                            std::to_string(caps->size()));
    for (std::size_t i = 0; i < caps->size(); ++i)
      if (!std::isfinite((*caps)[i]))
        throw InvalidInstance(idx("caps", i) + " is not finite");
  }
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::feasible_optimal:
      return "feasible-optimal";
    case SolveStatus::approximate:
      return "approximate";
  }
  return "unknown";
}

double chebyshev(const std::vector<double>& r, const std::vector<double>& s) {
  if (r.size() != s.size())
    throw DimensionMismatch("points of unequal dimension");
  double best = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    best = std::max(best, std::abs(r[i] - s[i]));
  return best;
}

double objective(const LocationInstance& inst, const std::vector<double>& x) {
  if (x.size() != inst.dimension)
    throw DimensionMismatch("point of unexpected dimension");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < inst.point_count(); ++j)
    best = std::max(best, chebyshev(inst.points[j], x) + inst.weight(j));
  return best;
}

PQPair build_pq(const LocationInstance& inst) {
  inst.validate();
  PQPair pq;
  pq.p.assign(inst.dimension, -std::numeric_limits<double>::infinity());
  pq.q.assign(inst.dimension, std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < inst.point_count(); ++j) {
    const double w = inst.weight(j);
    for (std::size_t i = 0; i < inst.dimension; ++i) {
      pq.p[i] = std::max(pq.p[i], inst.points[j][i] + w);
      pq.q[i] = std::min(pq.q[i], inst.points[j][i] - w);
    }
  }
  return pq;
}

TropMatrix block_matrix(const PQPair& pq) {
  const std::size_t n = pq.p.size();
  TropMatrix a(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    a(0, i + 1) = TropScalar(-pq.q[i]);
    a(i + 1, 0) = TropScalar(pq.p[i]);
  }
  return a;
}

LocationSolution solve_unconstrained(const LocationInstance& inst) {
  const PQPair pq = build_pq(inst);
  LocationSolution sol = segment_solution(pq.p, pq.q, half_span(pq.p, pq.q));
  sol.status = SolveStatus::optimal;
  return sol;
}

LocationSolution solve_via_spectral(const LocationInstance& inst) {
  const PQPair pq = build_pq(inst);
  const TropMatrix a = block_matrix(pq);
  const ExtremalFamily family = extremal_family(a);

  // A minimizer of y^- A y yields a location point once its first entry is
  // scaled to the neutral element.
  const auto strip = [](const TropVector& y) {
    std::vector<double> x(y.size() - 1);
    for (std::size_t i = 1; i < y.size(); ++i)
      x[i - 1] = y[i].value() - y[0].value();
    return x;
  };

  LocationSolution sol;
  sol.lambda = family.lambda.value();
  sol.lo = strip(family.at(1.0));
  sol.hi = strip(family.at(0.0));
  sol.status = SolveStatus::optimal;
  return sol;
}

LocationSolution solve_constrained(const LocationInstance& inst) {
  inst.validate();
  if (!inst.caps) throw MissingCaps("instance has no caps");
  const std::vector<double>& d = *inst.caps;

  const PQPair base = build_pq(inst);
  const double lambda0 = half_span(base.p, base.q);

  // Constraint envelopes: p1_i = max_j (r_ij - d_j), q1_i = min_j (r_ij + d_j).
  std::vector<double> p(inst.dimension), q(inst.dimension);
  for (std::size_t i = 0; i < inst.dimension; ++i) {
    double p1 = -std::numeric_limits<double>::infinity();
    double q1 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < inst.point_count(); ++j) {
      p1 = std::max(p1, inst.points[j][i] - d[j]);
      q1 = std::min(q1, inst.points[j][i] + d[j]);
    }
    p[i] = std::max(base.p[i] - lambda0, p1);
    q[i] = std::min(base.q[i] + lambda0, q1);
  }

  const double lambda_c = half_span(p, q);
  LocationSolution sol = segment_solution(p, q, lambda_c);
  sol.lambda_combined = lambda_c;
  if (lambda_c <= tolerance()) {
    sol.status = SolveStatus::feasible_optimal;
    sol.lambda = lambda0;
  } else {
    sol.status = SolveStatus::approximate;
    // The folded optimum says nothing about the original objective, so
    // report the value actually attained at the segment midpoint.
    sol.lambda = objective(inst, point_at(sol, 0.5));
  }
  return sol;
}

std::vector<double> point_at(const LocationSolution& sol, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw AlphaOutOfRange("alpha must lie in [0, 1]");
  std::vector<double> x(sol.lo.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = alpha * sol.lo[i] + (1.0 - alpha) * sol.hi[i];
  return x;
}

bool check_feasible(const LocationInstance& inst,
                    const std::vector<double>& x) {
  if (!inst.caps) throw MissingCaps("instance has no caps");
  for (std::size_t j = 0; j < inst.point_count(); ++j)
    if (chebyshev(inst.points[j], x) > (*inst.caps)[j] + tolerance())
      return false;
  return true;
}

std::vector<SegmentSample> sample_segment(const LocationInstance& inst,
                                          const LocationSolution& sol,
                                          std::size_t count) {
  std::vector<SegmentSample> samples;
  samples.reserve(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    const double alpha =
        count == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(count);
    std::vector<double> x = point_at(sol, alpha);
    const double value = objective(inst, x);
    samples.push_back({alpha, std::move(x), value});
  }
  return samples;
}

}  // namespace troploc
