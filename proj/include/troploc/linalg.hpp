#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "troploc/semifield.hpp"

namespace troploc {

/// Dense column vector over the max-plus semifield.  Immutable in spirit:
/// every operation returns a fresh value.
class TropVector {
 public:
  // n entries, all bottom.
  explicit TropVector(std::size_t n);
  TropVector(std::initializer_list<double> values);
  explicit TropVector(const std::vector<double>& values);
  static TropVector from_scalars(std::vector<TropScalar> entries);

  std::size_t size() const { return entries_.size(); }
  TropScalar operator[](std::size_t i) const { return entries_[i]; }
  TropScalar& operator[](std::size_t i) { return entries_[i]; }

  bool has_bottom() const;
  // Plain doubles, -inf standing for bottom.
  std::vector<double> values() const;

  friend bool operator==(const TropVector& a, const TropVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<TropScalar> entries_;
};

// Componentwise (+).
TropVector operator+(const TropVector& x, const TropVector& y);
// Scalar multiple c (*) x.
TropVector operator*(TropScalar c, const TropVector& x);
// Row-times-column product: (+)_i x_i (*) y_i.
TropScalar dot(const TropVector& x, const TropVector& y);
// Entrywise multiplicative inverse; the result plays the row-vector role
// x^-.  Requires a zero-free vector.  Antitone: x <= y implies x^- >= y^-.
TropVector conjugate(const TropVector& x);

/// Dense rows x cols matrix over the max-plus semifield, row-major.
class TropMatrix {
 public:
  // All entries bottom.
  TropMatrix(std::size_t rows, std::size_t cols);
  TropMatrix(std::initializer_list<std::initializer_list<double>> rows);
  static TropMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static TropMatrix from_columns(const std::vector<TropVector>& columns);
  // Identity: neutral diagonal, bottom off-diagonal.
  static TropMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  TropScalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  TropScalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  TropVector row(std::size_t i) const;
  TropVector column(std::size_t j) const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropScalar> entries_;
};

// Componentwise (+).
TropMatrix operator+(const TropMatrix& a, const TropMatrix& b);
// Max-plus product: (AB)_ij = (+)_k a_ik (*) b_kj.
TropMatrix operator*(const TropMatrix& a, const TropMatrix& b);
TropVector operator*(const TropMatrix& a, const TropVector& x);
// Scalar shift c (*) A.
TropMatrix operator*(TropScalar c, const TropMatrix& a);

// Max of the diagonal.  Square matrices only.
TropScalar trace(const TropMatrix& a);
// Iterated product; A^0 is the identity.  Square matrices only.
TropMatrix pow(const TropMatrix& a, std::size_t exponent);
TropMatrix transpose(const TropMatrix& a);

}  // namespace troploc
