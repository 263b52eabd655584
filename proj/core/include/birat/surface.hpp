#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "birat/polymat.hpp"

namespace birat {

/// Homogeneous parameterization (t1:t2:t3) -> (p1:p2:p3:p4) of a surface.
/// The coordinates live in rings::surface_t().
class SurfaceParam {
 public:
  /// Divides out gcd(p1..p4). Throws DegreeError unless all four are
  /// homogeneous of one degree >= 1, DomainError when all are zero.
  explicit SurfaceParam(std::array<Polynomial, 4> p, bool affine_convention = false);

  /// Affine input X_i = num[i] / den[i] in t1, t2. The denominators are
  /// brought to their lcm D, which becomes p4, and everything is homogenized
  /// with t3.
  static SurfaceParam from_affine(const std::array<Polynomial, 3>& num, const std::array<Polynomial, 3>& den);

  const Polynomial& p(std::size_t i) const { return p_.at(i); }
  const std::array<Polynomial, 4>& coordinates() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  bool affine_convention() const noexcept { return affine_; }

  /// X1..X4 -> p1..p4 (values in rings::surface_t()).
  Bindings coordinate_bindings() const;

 private:
  std::array<Polynomial, 4> p_;
  int degree_;
  bool affine_;
};

enum class MatrixKind { inversion_candidate, implicitization_candidate };

/// Polynomial matrix in X1..X4 whose rows are indexed by degree-m monomials
/// in t1, t2, t3. Column j stands for the bihomogeneous polynomial
/// sum_i entry(i, j) * row_monomials[i].
class ElimMatrix {
 public:
  /// Throws ShapeError when the row index does not match the matrix or the
  /// shape does not fit `kind`, DegreeError when a row monomial is not of
  /// degree m. Entries are embedded into rings::surface_x().
  ElimMatrix(PolyMatrix matrix, std::vector<Monomial> row_monomials, MatrixKind kind,
             std::optional<std::size_t> marked_column = std::nullopt);

  /// Builds a matrix given in affine variables (rows indexed by monomials of
  /// degree <= m in t1, t2 and entries in X1, X2, X3): row monomials are
  /// homogenized with t3 and each column with X4 up to its largest X-degree.
  static ElimMatrix from_affine(const PolyMatrix& matrix, const std::vector<Monomial>& affine_rows,
                                MatrixKind kind, std::optional<std::size_t> marked_column = std::nullopt);

  const PolyMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<Monomial>& row_monomials() const noexcept { return rows_; }
  unsigned m() const noexcept { return m_; }
  MatrixKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> marked_column() const noexcept { return marked_; }
  /// Entries of the column removed by strip_marked_column, if any.
  const std::vector<Polynomial>& erased_column() const noexcept { return erased_; }
  /// Column j as a polynomial in rings::surface_tx().
  Polynomial column_polynomial(std::size_t j) const;

  friend ElimMatrix strip_marked_column(const ElimMatrix& mat);

 private:
  PolyMatrix matrix_;
  std::vector<Monomial> rows_;
  unsigned m_ = 0;
  MatrixKind kind_;
  std::optional<std::size_t> marked_;
  std::vector<Polynomial> erased_;
};

/// Row indices (i1, i2, i3) with t1*V[i3] = t3*V[i1] and t2*V[i3] = t3*V[i2].
struct BetaTriple {
  std::size_t i1;
  std::size_t i2;
  std::size_t i3;
  friend bool operator==(const BetaTriple&, const BetaTriple&) = default;
};

/// Every valid triple, in lexicographic order of (i1, i2, i3).
std::vector<BetaTriple> all_beta_triples(const std::vector<Monomial>& row_monomials);
/// First valid triple; throws NoBetaTripleError when none exists.
BetaTriple find_beta_triple(const std::vector<Monomial>& row_monomials);

/// Candidate inverse (t1:t2:t3) = (psi1:psi2:psi3), polynomials in X1..X4.
struct InverseMap {
  Polynomial psi1;
  Polynomial psi2;
  Polynomial psi3;
  BetaTriple beta;
  bool certified = false;

  /// The three components divided by their common gcd.
  InverseMap reduced() const;
};

/// Inverse from the signed maximal minors at the rows of a beta triple. When
/// the chosen triple gives (0:0:0) every other valid triple is tried before
/// DegenerateMinorsError is thrown. Throws ShapeError unless `mat` is an
/// inversion candidate.
InverseMap invert_from_inversion_matrix(const ElimMatrix& mat, const BetaTriple& beta);
InverseMap invert_from_inversion_matrix(const ElimMatrix& mat);

/// d x (d-1) inversion candidate with the marked column (default: first)
/// removed; the removed entries are kept in erased_column().
ElimMatrix strip_marked_column(const ElimMatrix& mat);

enum class Verdict { proper, not_proper, inconclusive };
enum class Evidence {
  gcd_constant_and_certified_matrix,
  composition_verified,
  gcd_nonconstant_with_certified_matrix,
  uncertified
};

std::string to_string(Verdict v);
std::string to_string(Evidence e);

struct PropernessReport {
  Verdict verdict = Verdict::inconclusive;
  Evidence evidence = Evidence::uncertified;
  Polynomial gcd_of_minors{rings::surface_x()};
  Polynomial determinant{rings::surface_x()};
  std::vector<Polynomial> minors;
  std::size_t marked_column = 0;
  std::optional<InverseMap> inverse;
  /// det equals the expansion along the marked column through the minors.
  bool determinant_identity_holds = false;
  bool gcd_divides_determinant = false;
  /// Set for not_proper: det is F^delta with delta > 1.
  bool power_of_implicit_equation = false;
  std::vector<std::string> notes;
};

/// Properness test through the gcd of the maximal minors of the stripped
/// matrix. `certified` asserts that det(mat) is c*F^delta with delta = deg
/// of the map (true for constructions that guarantee it).
/// Throws SingularMatrixError when det(mat) = 0 and NotFollowingError when a
/// non-marked column does not vanish on the parameterization.
PropernessReport surface_properness(const ElimMatrix& mat, const SurfaceParam& param, bool certified = false);

}  // namespace birat
