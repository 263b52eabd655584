#pragma once

#include <array>
#include <vector>

#include "birat/surface.hpp"

namespace birat {

/// Ring of the Cayley construction: t1, t2, a, b, X1, X2, X3.
const RingPtr& dixon_ring();

/// Affine system F_i = q(t) X_i - p_i(t), i = 1, 2, 3, in dixon_ring().
class DixonSystem {
 public:
  /// Throws DixonInapplicableError unless each F_i has degree exactly 1 in
  /// X_i, does not involve the other X's, a or b, has positive degree in
  /// (t1, t2), and all three share the coefficient q of X_i.
  explicit DixonSystem(std::array<Polynomial, 3> f);
  static DixonSystem from_affine(const Polynomial& q, const std::array<Polynomial, 3>& p);
  /// Dehomogenizes at t3 = 1 and uses p4 as the shared denominator.
  static DixonSystem from_param(const SurfaceParam& param);

  const Polynomial& f(std::size_t i) const { return f_.at(i); }
  const Polynomial& denominator() const noexcept { return q_; }
  const Polynomial& numerator(std::size_t i) const { return p_.at(i); }
  /// Largest total degree in (t1, t2) of the three equations.
  unsigned degree() const noexcept { return degree_; }
  SurfaceParam param() const;

 private:
  std::array<Polynomial, 3> f_;
  Polynomial q_;
  std::array<Polynomial, 3> p_;
  unsigned degree_;
};

/// det[F(t1,t2); F(a,t2); F(a,b)] / ((t1 - a)(t2 - b)). Throws
/// DixonInapplicableError when the division is inexact or the quotient is 0.
Polynomial cayley_quotient(const DixonSystem& sys);

struct DixonMatrix {
  /// Rows: t^beta F_i for |beta| <= d-2 (F outer, beta inner), then the
  /// coefficient rows of the Cayley quotient for each (a,b)-monomial of
  /// degree <= d-1; quotient rows of higher (a,b)-degree are not used.
  /// Columns: t-monomials of degree <= 2d-2. Entries in X1, X2, X3.
  PolyMatrix matrix;
  /// Column index, in the order 1, t1, t2, t1^2, t1*t2, t2^2, ...
  std::vector<Monomial> column_monomials;
  /// Row labels such as "F1", "t1*F2" or "a*b".
  std::vector<std::string> row_labels;
  /// transpose(matrix), homogenized with t3 on the rows and X4 per column;
  /// the last column is marked. Marking the column of F1 instead makes
  /// every minor vanish on the surface for the quartic example.
  ElimMatrix candidate;
  /// Quotient rows of (a,b)-degree above d-1 left out of the matrix.
  std::size_t unused_quotient_rows = 0;
};

/// Monomials in two variables of degree <= max_degree: ascending degree,
/// first variable major within a degree.
std::vector<Monomial> affine_monomials(unsigned max_degree);

/// Throws DixonInapplicableError for systems of degree 1 or when the quotient has t-support outside the
/// columns and SingularMatrixError when the determinant vanishes.
DixonMatrix dixon_matrix(const DixonSystem& sys);

}  // namespace birat
