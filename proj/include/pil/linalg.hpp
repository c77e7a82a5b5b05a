#pragma once

// Exact rational linear algebra: dense matrices over Q, reduced row echelon
// forms, canonical kernels and subspace sums.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pil {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "7", "-3", "+2" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonical (lowest terms, q > 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  /// Every row must have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> v);
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector apply(std::span<const Rational> v) const;

  bool operator==(const Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space. Vector j has a 1 in the j-th free column
/// and zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

bool rowspace_contains(const Matrix& m, std::span<const Rational> v);

/// RREF basis (nonzero rows only) of the sum of the row spaces.
Matrix subspace_sum(std::span<const Matrix> bases, std::size_t cols);

/// The nonzero rows of rref(m).
Matrix row_basis(const Matrix& m);

/// Incrementally maintained reduced row echelon basis. Rows are kept sorted
/// by pivot column and fully reduced, so to_matrix() equals row_basis() of
/// everything inserted so far.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  /// Returns true if `v` was independent of the current rows.
  bool insert(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  Matrix to_matrix() const;

 private:
  Vector reduce(std::span<const Rational> v) const;

  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace pil
