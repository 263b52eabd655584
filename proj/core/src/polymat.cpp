#include "birat/polymat.hpp"

#include <algorithm>
#include <numeric>

#include "birat/errors.hpp"

namespace birat {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("expected " + std::to_string(rows_ * cols_) + " entries for a " + std::to_string(rows_) +
                     "x" + std::to_string(cols_) + " matrix, got " + std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!same_ring(e.ring(), ring_)) throw RingError("matrix entry lives in ring " + describe(*e.ring()));
  }
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Polynomial> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged rows in matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return PolyMatrix(std::move(ring), r, c, std::move(entries));
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  return entries_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  if (!same_ring(value.ring(), ring_)) throw RingError("matrix entry lives in ring " + describe(*value.ring()));
  entries_[r * cols_ + c] = std::move(value);
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  if (r >= rows_) throw ShapeError("row index out of range");
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  if (c >= cols_) throw ShapeError("column index out of range");
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> delete_rows,
                                 std::span<const std::size_t> delete_cols) const {
  std::vector<bool> drop_r(rows_, false);
  std::vector<bool> drop_c(cols_, false);
  for (auto r : delete_rows) {
    if (r >= rows_) throw ShapeError("deleted row index out of range");
    drop_r[r] = true;
  }
  for (auto c : delete_cols) {
    if (c >= cols_) throw ShapeError("deleted column index out of range");
    drop_c[c] = true;
  }
  const auto kept_r = static_cast<std::size_t>(std::count(drop_r.begin(), drop_r.end(), false));
  const auto kept_c = static_cast<std::size_t>(std::count(drop_c.begin(), drop_c.end(), false));
  std::vector<Polynomial> entries;
  entries.reserve(kept_r * kept_c);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (drop_r[r]) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!drop_c[c]) entries.push_back((*this)(r, c));
    }
  }
  return PolyMatrix(ring_, kept_r, kept_c, std::move(entries));
}

PolyMatrix PolyMatrix::embed(const RingPtr& target) const {
  std::vector<Polynomial> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(e.embed(target));
  return PolyMatrix(target, rows_, cols_, std::move(entries));
}

std::vector<Polynomial> PolyMatrix::apply(std::span<const Polynomial> v) const {
  if (v.size() != cols_) throw ShapeError("vector length does not match the column count");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (!e.is_zero() && !v[c].is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_ring(a.ring_, b.ring_) && a.entries_ == b.entries_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ in matrix product");
  if (!same_ring(a.ring(), b.ring())) throw RingError("matrix product across different rings");
  PolyMatrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Polynomial acc(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) acc += a(r, k) * b(k, c);
      }
      out.set(r, c, std::move(acc));
    }
  }
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& a) {
  PolyMatrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) out.set(r, k, a(r, k) * c);
  }
  return out;
}

Polynomial det_fraction_free(const PolyMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  std::vector<std::vector<Polynomial>> a;
  a.reserve(n);
  for (std::size_t r = 0; r < n; ++r) a.push_back(m.row(r));

  Polynomial previous = Polynomial::constant(m.ring(), 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    // Sparsest nonzero pivot keeps the intermediate entries small.
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      if (pivot == n || a[r][k].size() < a[pivot][k].size()) pivot = r;
    }
    if (pivot == n) return Polynomial(m.ring());
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = a[i][j] * a[k][k];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) v -= a[i][k] * a[k][j];
        a[i][j] = previous.is_unit() && previous.leading_coefficient() == 1 ? std::move(v)
                                                                           : exact_divide(v, previous);
      }
      a[i][k] = Polynomial(m.ring());
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

Polynomial cofactor_expand(const std::vector<std::vector<const Polynomial*>>& a, const RingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return *a[0][0];
  Polynomial acc(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c]->is_zero()) continue;
    std::vector<std::vector<const Polynomial*>> sub(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) sub[r - 1].push_back(a[r][k]);
      }
    }
    Polynomial term = *a[0][c] * cofactor_expand(sub, ring);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

Polynomial det_cofactor(const PolyMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  std::vector<std::vector<const Polynomial*>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r].push_back(&m(r, c));
  }
  return cofactor_expand(a, m.ring());
}

bool SignedMinorVector::all_zero() const {
  return std::all_of(minors_.begin(), minors_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

SignedMinorVector signed_maximal_minors(const PolyMatrix& m) {
  if (m.rows() < 2 || m.cols() + 1 != m.rows()) {
    throw ShapeError("signed maximal minors need a d x (d-1) matrix with d >= 2, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
  std::vector<Polynomial> minors;
  minors.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t drop[] = {i};
    Polynomial d = det_fraction_free(m.submatrix(drop, {}));
    minors.push_back(i % 2 == 0 ? std::move(d) : -d);
  }
  return SignedMinorVector(std::move(minors));
}

Polynomial minor(const PolyMatrix& m, std::span<const std::size_t> delete_rows,
                 std::span<const std::size_t> delete_cols) {
  const PolyMatrix sub = m.submatrix(delete_rows, delete_cols);
  if (!sub.is_square()) {
    throw ShapeError("minor of shape " + std::to_string(sub.rows()) + "x" + std::to_string(sub.cols()) +
                     " is not square");
  }
  return det_fraction_free(sub);
}

std::string to_string(const PolyMatrix& m) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(to_string(m(r, c)));
      width[c] = std::max(width[c], cells.back().size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      out += cell;
      if (c + 1 < m.cols()) out += std::string(width[c] - cell.size() + 3, ' ');
      else out += std::string(width[c] - cell.size(), ' ');
    }
    out += " ]\n";
  }
  return out;
}

}  // namespace birat
