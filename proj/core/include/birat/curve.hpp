#pragma once

#include <array>
#include <optional>
#include <utility>

#include "birat/polymat.hpp"

namespace birat {

/// Plane curve t -> (p1/q1, p2/q2) with polynomials in rings::curve_t().
/// Each fraction is reduced by its gcd at construction; the inputs are kept
/// for reporting.
class PlaneCurveParam {
 public:
  /// Throws DomainError for a zero denominator and LineCaseError when a
  /// reduced coordinate is constant (m = 0 or n = 0).
  PlaneCurveParam(Polynomial p1, Polynomial q1, Polynomial p2, Polynomial q2);

  const Polynomial& p1() const noexcept { return p1_; }
  const Polynomial& q1() const noexcept { return q1_; }
  const Polynomial& p2() const noexcept { return p2_; }
  const Polynomial& q2() const noexcept { return q2_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  /// The four inputs as given, before reduction.
  const std::array<Polynomial, 4>& original() const noexcept { return original_; }
  bool was_reduced() const;

 private:
  Polynomial p1_, q1_, p2_, q2_;
  int m_, n_;
  std::array<Polynomial, 4> original_;
};

/// (m+n) x (m+n) matrix in x, y. Row r holds the coefficient of
/// t^(m+n-1-r); the columns are t^(n-1)(p1 - x q1), ..., (p1 - x q1),
/// t^(m-1)(p2 - y q2), ..., (p2 - y q2).
PolyMatrix build_sylvester(const PlaneCurveParam& param);

struct CurveInversionResult {
  bool proper = false;
  PolyMatrix sylvester{rings::curve_xy(), 0, 0};
  Polynomial determinant{rings::curve_xy()};
  /// Signed maximal minors of the Sylvester matrix without its last column.
  std::vector<Polynomial> minors;
  Polynomial gcd_of_minors{rings::curve_xy()};
  /// det(S) divided by its content.
  Polynomial implicit_equation{rings::curve_xy()};
  /// t = numerator / denominator = minors[i-1] / minors[i] for the 1-based chosen_index i.
  std::optional<std::pair<Polynomial, Polynomial>> inverse;
  std::optional<std::size_t> chosen_index;
  /// det(S) = (-1)^(m+n-1) * sum c_i * minors[i] over the erased last column c.
  bool determinant_identity_holds = false;
};

CurveInversionResult curve_properness(const PlaneCurveParam& param);

/// True iff the recorded inverse composes with the parameterization to t.
bool curve_inverse_check(const PlaneCurveParam& param, const CurveInversionResult& result);
/// Same check for an arbitrary pair (numerator, denominator) in x, y.
bool curve_inverse_check(const PlaneCurveParam& param, const Polynomial& numerator, const Polynomial& denominator);

/// C(p1/q1, p2/q2) == 0 after clearing denominators.
bool curve_implicit_check(const PlaneCurveParam& param, const Polynomial& c);

}  // namespace birat
