#include <algorithm>

#include "birat/errors.hpp"
#include "birat/surface.hpp"

namespace birat {

ElimMatrix::ElimMatrix(PolyMatrix matrix, std::vector<Monomial> row_monomials, MatrixKind kind,
                       std::optional<std::size_t> marked_column)
    : matrix_(matrix.embed(rings::surface_x())), rows_(std::move(row_monomials)), kind_(kind) {
  if (rows_.empty()) throw ShapeError("an elimination matrix needs at least one row");
  if (rows_.size() != matrix_.rows()) {
    throw ShapeError(std::to_string(rows_.size()) + " row monomials for " + std::to_string(matrix_.rows()) +
                     " matrix rows");
  }
  m_ = rows_.front().degree();
  for (const auto& r : rows_) {
    if (r.size() != 3) throw ShapeError("row monomials must be in t1, t2, t3");
    if (r.degree() != m_) throw DegreeError("row monomials have different degrees");
  }
  const std::size_t d = rows_.size();
  if (kind_ == MatrixKind::implicitization_candidate) {
    if (matrix_.cols() != d) throw ShapeError("an implicitization candidate must be square");
    if (marked_column && *marked_column >= d) throw ShapeError("marked column out of range");
    marked_ = marked_column;
  } else if (matrix_.cols() + 1 != d) {
    throw ShapeError("an inversion candidate must be d x (d-1)");
  }
}

ElimMatrix ElimMatrix::from_affine(const PolyMatrix& matrix, const std::vector<Monomial>& affine_rows,
                                   MatrixKind kind, std::optional<std::size_t> marked_column) {
  unsigned m = 0;
  for (const auto& r : affine_rows) {
    if (r.size() < 2 || r.size() > 3 || (r.size() == 3 && r[2] != 0)) {
      throw ShapeError("affine row monomials must be in t1, t2 only");
    }
    m = std::max(m, r.degree());
  }
  std::vector<Monomial> rows;
  rows.reserve(affine_rows.size());
  for (const auto& r : affine_rows) rows.emplace_back(std::vector<std::uint32_t>{r[0], r[1], m - r.degree()});

  const RingPtr& ring = rings::surface_x();
  const PolyMatrix embedded = matrix.embed(ring);
  PolyMatrix out(ring, embedded.rows(), embedded.cols());
  for (std::size_t c = 0; c < embedded.cols(); ++c) {
    int degree = 0;
    for (std::size_t r = 0; r < embedded.rows(); ++r) degree = std::max(degree, embedded(r, c).total_degree());
    for (std::size_t r = 0; r < embedded.rows(); ++r) out.set(r, c, homogenize(embedded(r, c), "X4", degree));
  }
  return ElimMatrix(std::move(out), std::move(rows), kind, marked_column);
}

Polynomial ElimMatrix::column_polynomial(std::size_t j) const {
  const RingPtr& ring = rings::surface_tx();
  Polynomial out(ring);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Polynomial& e = matrix_.at(i, j);
    if (e.is_zero()) continue;
    Monomial t(ring->size());
    for (std::size_t k = 0; k < 3; ++k) t.set(k, rows_[i][k]);
    out += e.embed(ring) * Polynomial::term(ring, t);
  }
  return out;
}

namespace {

bool is_beta_triple(const std::vector<Monomial>& v, std::size_t i1, std::size_t i2, std::size_t i3) {
  Monomial t1(3), t2(3), t3(3);
  t1.set(0, 1);
  t2.set(1, 1);
  t3.set(2, 1);
  return t1 * v[i3] == t3 * v[i1] && t2 * v[i3] == t3 * v[i2];
}

}  // namespace

std::vector<BetaTriple> all_beta_triples(const std::vector<Monomial>& row_monomials) {
  std::vector<BetaTriple> out;
  const std::size_t d = row_monomials.size();
  for (const auto& r : row_monomials) {
    if (r.size() != 3) throw ShapeError("row monomials must be in t1, t2, t3");
  }
  for (std::size_t i1 = 0; i1 < d; ++i1) {
    for (std::size_t i2 = 0; i2 < d; ++i2) {
      for (std::size_t i3 = 0; i3 < d; ++i3) {
        if (is_beta_triple(row_monomials, i1, i2, i3)) out.push_back({i1, i2, i3});
      }
    }
  }
  return out;
}

BetaTriple find_beta_triple(const std::vector<Monomial>& row_monomials) {
  const auto all = all_beta_triples(row_monomials);
  if (all.empty()) throw NoBetaTripleError("no row monomial is divisible by t3 with matching t1, t2 shifts");
  return all.front();
}

ElimMatrix strip_marked_column(const ElimMatrix& mat) {
  if (mat.kind() != MatrixKind::implicitization_candidate) {
    throw ShapeError("only implicitization candidates have a marked column");
  }
  const std::size_t k = mat.marked_column().value_or(0);
  const std::size_t drop[] = {k};
  ElimMatrix out(mat.matrix().submatrix({}, drop), mat.row_monomials(), MatrixKind::inversion_candidate);
  out.erased_ = mat.matrix().column(k);
  out.marked_ = k;
  return out;
}

}  // namespace birat
