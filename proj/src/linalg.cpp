#include "troploc/linalg.hpp"

#include <utility>

namespace troploc {

namespace {

void require_nonempty(std::size_t n) {
  if (n == 0) throw InvalidValue("dimension must be at least 1");
}

}  // namespace

TropVector::TropVector(std::size_t n) : entries_(n) { require_nonempty(n); }

TropVector::TropVector(std::initializer_list<double> values)
    : TropVector(std::vector<double>(values)) {}

TropVector::TropVector(const std::vector<double>& values) {
  require_nonempty(values.size());
  entries_.reserve(values.size());
  for (double v : values) entries_.emplace_back(v);
}

TropVector TropVector::from_scalars(std::vector<TropScalar> entries) {
  require_nonempty(entries.size());
  TropVector x(entries.size());
  x.entries_ = std::move(entries);
  return x;
}

bool TropVector::has_bottom() const {
  for (const auto& e : entries_)
    if (e.is_bottom()) return true;
  return false;
}

std::vector<double> TropVector::values() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value());
  return out;
}

TropVector operator+(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("vector sizes differ in addition");
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

TropVector operator*(TropScalar c, const TropVector& x) {
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

TropScalar dot(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("vector sizes differ in product");
  TropScalar acc = TropScalar::bottom();
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
  return acc;
}

TropVector conjugate(const TropVector& x) {
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_bottom())
      throw BottomEntry("conjugate of a vector with a bottom entry");
    out[i] = inv(x[i]);
  }
  return out;
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  require_nonempty(rows);
  require_nonempty(cols);
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : TropMatrix(from_rows({rows.begin(), rows.end()})) {}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  require_nonempty(rows.size());
  const std::size_t cols = rows.front().size();
  TropMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("rows of unequal length");
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = TropScalar(rows[i][j]);
  }
  return a;
}

TropMatrix TropMatrix::from_columns(const std::vector<TropVector>& columns) {
  require_nonempty(columns.size());
  const std::size_t rows = columns.front().size();
  TropMatrix a(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw DimensionMismatch("columns of unequal length");
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = columns[j][i];
  }
  return a;
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = TropScalar::one();
  return a;
}

TropVector TropMatrix::row(std::size_t i) const {
  TropVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

TropVector TropMatrix::column(std::size_t j) const {
  TropVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

TropMatrix operator+(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ in addition");
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

TropMatrix operator*(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("inner dimensions differ in product");
  TropMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      TropScalar acc = TropScalar::bottom();
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

TropVector operator*(const TropMatrix& a, const TropVector& x) {
  if (a.cols() != x.size())
    throw DimensionMismatch("matrix-vector dimensions differ");
  TropVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    TropScalar acc = TropScalar::bottom();
    for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * x[k];
    out[i] = acc;
  }
  return out;
}

TropMatrix operator*(TropScalar c, const TropMatrix& a) {
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

TropScalar trace(const TropMatrix& a) {
  if (!a.is_square()) throw NonSquare("trace of a non-square matrix");
  TropScalar acc = TropScalar::bottom();
  for (std::size_t i = 0; i < a.rows(); ++i) acc = acc + a(i, i);
  return acc;
}

TropMatrix pow(const TropMatrix& a, std::size_t exponent) {
  if (!a.is_square()) throw NonSquare("power of a non-square matrix");
  TropMatrix acc = TropMatrix::identity(a.rows());
  for (std::size_t k = 0; k < exponent; ++k) acc = acc * a;
  return acc;
}

TropMatrix transpose(const TropMatrix& a) {
  TropMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

}  // namespace troploc
