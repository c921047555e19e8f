#include "troploc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace troploc {

namespace {

// Reachability over the support digraph, forward or reversed.
std::vector<char> reachable_from(const TropMatrix& a, std::size_t start,
                                 bool reversed) {
  const std::size_t n = a.rows();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const TropScalar e = reversed ? a(w, v) : a(v, w);
      if (!e.is_bottom() && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

void require_irreducible(const TropMatrix& a) {
  if (!is_irreducible(a)) throw Reducible("matrix is reducible");
}

}  // namespace

bool is_irreducible(const TropMatrix& a) {
  if (!a.is_square()) throw NonSquare("irreducibility of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 1) return !a(0, 0).is_bottom();
  const auto fwd = reachable_from(a, 0, false);
  const auto bwd = reachable_from(a, 0, true);
  for (std::size_t v = 0; v < n; ++v)
    if (!fwd[v] || !bwd[v]) return false;
  return true;
}

TropScalar eigenvalue(const TropMatrix& a) {
  require_irreducible(a);
  const std::size_t n = a.rows();
  TropMatrix power = a;
  TropScalar lambda = trace(power);
  for (std::size_t m = 2; m <= n; ++m) {
    power = power * a;
    lambda = lambda + pow(trace(power), 1.0 / static_cast<double>(m));
  }
  return lambda;
}

TropMatrix normalized_closure(const TropMatrix& a, TropScalar lambda) {
  if (!a.is_square()) throw NonSquare("closure of a non-square matrix");
  if (lambda.is_bottom())
    throw BottomPower("closure needs a nonbottom eigenvalue");
  const TropMatrix b = inv(lambda) * a;
  TropMatrix acc = b;
  TropMatrix power = b;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    power = power * b;
    acc = acc + power;
  }
  return acc;
}

SpectralResult eigenvector_basis(const TropMatrix& a) {
  const TropScalar lambda = eigenvalue(a);
  const TropMatrix cross = normalized_closure(a, lambda);
  const std::size_t n = a.rows();
  const double eps = tolerance();

  std::vector<TropVector> retained;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(cross(j, j).value()) > eps) continue;
    TropVector candidate = cross.column(j);
    if (retained.empty()) {
      retained.push_back(candidate);
      continue;
    }
    // Principal solution of the residuated combination; the candidate is
    // dependent iff the combination reproduces it.
    TropVector combo(n);
    for (const TropVector& x : retained) {
      double c = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i)
        c = std::min(c, candidate[i].value() - x[i].value());
      combo = combo + TropScalar(c) * x;
    }
    bool dependent = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(combo[i].value() - candidate[i].value()) > eps) {
        dependent = false;
        break;
      }
    }
    if (!dependent) retained.push_back(candidate);
  }
  return {lambda, cross, TropMatrix::from_columns(retained)};
}

TropScalar phi(const TropMatrix& a, const TropVector& x) {
  if (!a.is_square() || a.cols() != x.size())
    throw DimensionMismatch("phi needs a square matrix matching the vector");
  if (x.has_bottom()) throw BottomEntry("phi needs a zero-free vector");
  TropScalar best = TropScalar::bottom();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_bottom()) continue;
      const double w = a(i, j).value() - x[i].value() + x[j].value();
      best = best + TropScalar(w);
    }
  }
  return best;
}

TropVector ExtremalFamily::at(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw AlphaOutOfRange("alpha must lie in [0, 1]");
  TropVector x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    x[i] = pow(u[i], alpha) * pow(v[i], alpha - 1.0);
  return x;
}

ExtremalFamily extremal_family(const TropMatrix& a) {
  const SpectralResult of_a = eigenvector_basis(a);
  const SpectralResult of_at = eigenvector_basis(transpose(a));
  return {of_a.lambda, of_a.basis.column(0), of_at.basis.column(0)};
}

TropVector extremal_point(const TropMatrix& a, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw AlphaOutOfRange("alpha must lie in [0, 1]");
  return extremal_family(a).at(alpha);
}

}  // namespace troploc
