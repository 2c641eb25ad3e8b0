#pragma once

// Exact integer and rational matrices.
//
// Everything here works over Z (mpz_class) or Q (mpq_class); there is no
// floating point anywhere in the module.  The Smith normal form is the
// workhorse: kernels, ranks, cokernels and integer solvability all go
// through it.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conifold/errors.hpp"

namespace conifold {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.  T must be default
/// constructible to its additive zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionMismatch("matrix entry count does not match its shape");
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("ragged row list");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = T(v);
      ++i;
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ail == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Saturated integer kernel {v : M v = 0}; columns are in Hermite normal form.
IntMatrix kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Z^rows / (column span of M) = Z^free_rank + sum Z/torsion[i].
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
};

QuotientStructure quotient_structure(const IntMatrix& m);

/// Canonical basis of the column lattice of M: zero columns dropped, the
/// transpose is in row Hermite form (positive pivots, entries above each
/// pivot reduced into [0, pivot)).
IntMatrix column_hermite_form(const IntMatrix& m);

/// Some integer x with M x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b);

/// True iff the column lattices of X and Y coincide (each column of one is
/// an integer combination of the other's columns).
bool same_column_lattice(const IntMatrix& x, const IntMatrix& y);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Inverse of a unimodular integer matrix; throws RankDeficient otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Reduced row echelon form and the pivot columns.
std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix m);

/// Basis of the rational null space, one vector per free column of the RREF.
RatMatrix rational_null_space(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

/// [X | Y] side by side; both must have the same row count.
IntMatrix hstack(const IntMatrix& x, const IntMatrix& y);

IntMatrix columns_of(const IntMatrix& m, std::span<const std::size_t> indices);

bool has_zero_row(const IntMatrix& m);
std::vector<std::size_t> zero_rows(const IntMatrix& m);

Integer content(std::span<const Integer> v);

std::string to_string(const IntMatrix& m);

}  // namespace conifold
