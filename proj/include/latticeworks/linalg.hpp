#pragma once

// Exact integer/rational linear algebra. Everything here is arbitrary
// precision (GMP); no floating point is used anywhere in latticeworks.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lw {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Raised for mathematically invalid input (degenerate forms, dependent
/// vectors, odd lattices, ...). The message is the short error name.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a rows x cols.size() matrix whose j-th column is cols[j].
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    T acc;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
    return y;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);
/// Returns the matrix if every entry has denominator 1; throws MathError otherwise.
IntMatrix to_integral(const RatMatrix& m, const std::string& what);
bool is_integral(const RatMatrix& m);

/// Smith normal form U*M*V = S. U_inv/V_inv are tracked alongside so that
/// callers never need to invert a unimodular matrix.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... of S.
  IntVector divisors() const;
};

SnfResult snf(const IntMatrix& m);

/// Saturated basis of {x in Z^cols : M x = 0}, in Hermite normal form.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Primitive hull of span(vectors) in Z^ambient_rank, in Hermite normal form.
/// Throws MathError("rank deficiency") on dependent input.
std::vector<IntVector> saturate(const std::vector<IntVector>& vectors, std::size_t ambient_rank);

/// Row-style Hermite normal form of the Z-span of the rows of m. Only the
/// nonzero rows are returned; pivots are positive and entries above a pivot
/// are reduced into [0, pivot). Two generating sets span the same subgroup
/// iff their HNFs coincide.
IntMatrix hnf_rows(IntMatrix m);

/// Basis (HNF) of the subgroup generated by possibly dependent vectors.
std::vector<IntVector> span_basis(const std::vector<IntVector>& vectors, std::size_t ambient_rank);

std::size_t rank(const IntMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact signature of a nondegenerate symmetric form by rational congruence
/// diagonalization. Throws MathError("degenerate form").
Signature signature(const IntMatrix& gram);

/// Fraction-free (Bareiss) determinant.
Int det(const IntMatrix& m);

RatMatrix inverse(const RatMatrix& m);

Int gcd_of(const IntVector& v);
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

}  // namespace lw
