#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "birat/polynomial.hpp"

namespace birat {

/// Dense row-major matrix of polynomials over one shared ring.
class PolyMatrix {
 public:
  /// rows x cols zero matrix.
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  /// Throws ShapeError when entries.size() != rows * cols and RingError when
  /// an entry lives in another ring.
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Polynomial value);

  std::vector<Polynomial> row(std::size_t r) const;
  std::vector<Polynomial> column(std::size_t c) const;

  PolyMatrix transpose() const;
  /// Matrix with the listed rows and columns removed (indices may repeat).
  PolyMatrix submatrix(std::span<const std::size_t> delete_rows, std::span<const std::size_t> delete_cols) const;
  PolyMatrix embed(const RingPtr& target) const;

  /// this * v; throws ShapeError unless v.size() == cols().
  std::vector<Polynomial> apply(std::span<const Polynomial> v) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Rational& c, const PolyMatrix& a);

/// Bareiss fraction-free elimination. A column with no nonzero pivot
/// candidate means the matrix is singular and yields 0 directly. Throws
/// ShapeError for non-square input.
Polynomial det_fraction_free(const PolyMatrix& m);
/// Laplace expansion along the first row; reference implementation.
Polynomial det_cofactor(const PolyMatrix& m);

/// Signed maximal minors of a d x (d-1) matrix: minors[i] is
/// (-1)^i * det(m without row i) for 0-based i, which makes
/// transpose(m) * minors the zero vector.
class SignedMinorVector {
 public:
  explicit SignedMinorVector(std::vector<Polynomial> minors) : minors_(std::move(minors)) {}

  std::size_t size() const noexcept { return minors_.size(); }
  const Polynomial& operator[](std::size_t i) const { return minors_[i]; }
  std::span<const Polynomial> values() const noexcept { return minors_; }
  bool all_zero() const;

 private:
  std::vector<Polynomial> minors_;
};

SignedMinorVector signed_maximal_minors(const PolyMatrix& m);

/// Unsigned determinant of the submatrix left after deleting rows and columns.
Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> delete_rows,
                 std::span<const std::size_t> delete_cols);

/// Aligned text grid, one bracketed line per row.
std::string to_string(const PolyMatrix& m);

/// Dense matrix of rationals.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;

/// Reduced row echelon form computed exactly. Pivots are taken leftmost
/// column first, smallest row index first. `pivot_columns` receives the pivot
/// column of each nonzero row.
ScalarMatrix rref(const ScalarMatrix& m, std::vector<std::size_t>* pivot_columns = nullptr);

/// Basis of the right nullspace: one vector per free column f of the RREF,
/// with 1 at f and zeros at the other free columns.
std::vector<RationalVector> nullspace_rational(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

}  // namespace birat
