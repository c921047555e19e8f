#pragma once

#include "troploc/linalg.hpp"

namespace troploc {

/// Eigenvalue and eigenvector generators of an irreducible matrix.
struct SpectralResult {
  TropScalar lambda;
  // A^x = B (+) B^2 (+) ... (+) B^n with B = lambda^-1 (*) A.
  TropMatrix cross;
  // Columns of A^x with neutral diagonal entry, filtered down to an
  // independent generating set of the eigenspace.
  TropMatrix basis;
};

/// Eigenvector pair (u of A, v of A^T) together with the one-parameter
/// family of minimizers of x^- A x from the extremal property:
/// x_i(alpha) = u_i^alpha (*) v_i^(alpha-1), 0 <= alpha <= 1.
struct ExtremalFamily {
  TropScalar lambda;
  TropVector u;
  TropVector v;

  TropVector at(double alpha) const;
};

/// True iff the support digraph (edge i->j whenever a_ij is not bottom)
/// is strongly connected.  A 1x1 matrix counts as irreducible only when
/// its entry is nonbottom, so the eigenvalue of an irreducible matrix is
/// always finite.
bool is_irreducible(const TropMatrix& a);

/// Unique eigenvalue of an irreducible matrix:
/// lambda = (+)_{m=1..n} tr^{1/m}(A^m).
TropScalar eigenvalue(const TropMatrix& a);

/// B (+) B^2 (+) ... (+) B^n for B = lambda^-1 (*) A.  Validates only the
/// shape and lambda; callers obtain lambda from eigenvalue(), which gates
/// on irreducibility.
TropMatrix normalized_closure(const TropMatrix& a, TropScalar lambda);

/// Eigenvalue plus the A^x matrix and the independent generating columns
/// of the eigenspace.  Column y is dependent on retained columns x_k iff
/// y = (+)_k c_k (*) x_k for the principal coefficients
/// c_k = min_i (y_i - x_ki); columns are scanned left to right.
SpectralResult eigenvector_basis(const TropMatrix& a);

/// x^- A x = max_{i,j} (-x_i + a_ij + x_j).  Requires a zero-free x; for
/// irreducible A this is bounded below by the eigenvalue.
TropScalar phi(const TropMatrix& a, const TropVector& x);

/// First basis column of A and of A^T, packaged with the evaluator of the
/// minimizer family.
ExtremalFamily extremal_family(const TropMatrix& a);

/// Point of the minimizer family at a given alpha in [0,1]:
/// phi(a, extremal_point(a, alpha)) equals the eigenvalue.
TropVector extremal_point(const TropMatrix& a, double alpha);

}  // namespace troploc
