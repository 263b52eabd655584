#include "birat/curve.hpp"

#include <algorithm>
#include <tuple>

#include "birat/errors.hpp"
#include "birat/verify.hpp"

namespace birat {

namespace {

std::pair<Polynomial, Polynomial> reduce(const Polynomial& p, const Polynomial& q, const char* label) {
  if (q.is_zero()) throw DomainError(std::string("zero denominator ") + label);
  if (p.is_zero()) return {p, Polynomial::constant(p.ring(), 1)};
  const Polynomial g = gcd(p, q);
  if (g.is_unit()) return {p, q};
  return {exact_divide(p, g), exact_divide(q, g)};
}

}  // namespace

PlaneCurveParam::PlaneCurveParam(Polynomial p1, Polynomial q1, Polynomial p2, Polynomial q2)
    : p1_(p1.embed(rings::curve_t())),
      q1_(q1.embed(rings::curve_t())),
      p2_(p2.embed(rings::curve_t())),
      q2_(q2.embed(rings::curve_t())),
      m_(0),
      n_(0),
      original_{p1_, q1_, p2_, q2_} {
  std::tie(p1_, q1_) = reduce(p1_, q1_, "q1");
  std::tie(p2_, q2_) = reduce(p2_, q2_, "q2");
  m_ = std::max(p1_.total_degree(), q1_.total_degree());
  n_ = std::max(p2_.total_degree(), q2_.total_degree());
  if (m_ < 1 || n_ < 1) throw LineCaseError("a coordinate is constant, so the curve is a line");
}

bool PlaneCurveParam::was_reduced() const {
  return !(original_[0] == p1_ && original_[1] == q1_ && original_[2] == p2_ && original_[3] == q2_);
}

PolyMatrix build_sylvester(const PlaneCurveParam& param) {
  const RingPtr& txy = rings::curve_txy();
  const Polynomial x = Polynomial::variable(txy, "x");
  const Polynomial y = Polynomial::variable(txy, "y");
  const Polynomial t = Polynomial::variable(txy, "t");
  const Polynomial f1 = param.p1().embed(txy) - x * param.q1().embed(txy);
  const Polynomial f2 = param.p2().embed(txy) - y * param.q2().embed(txy);
  const auto m = static_cast<std::size_t>(param.m());
  const auto n = static_cast<std::size_t>(param.n());
  const std::size_t d = m + n;

  std::vector<Polynomial> columns;
  for (std::size_t k = n; k-- > 0;) columns.push_back(t.pow(static_cast<unsigned>(k)) * f1);
  for (std::size_t k = m; k-- > 0;) columns.push_back(t.pow(static_cast<unsigned>(k)) * f2);

  PolyMatrix s(rings::curve_xy(), d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const auto coeffs = columns[c].coefficients_in(0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      s.set(d - 1 - k, c, coeffs[k].embed(rings::curve_xy()));
    }
  }
  return s;
}

namespace {

bool divides(const Polynomial& d, const Polynomial& p) {
  try {
    exact_divide(p, d);
    return true;
  } catch (const DivisionError&) {
    return false;
  }
}

FractionBindings curve_bindings(const PlaneCurveParam& param) {
  return {{"x", {param.p1(), param.q1()}}, {"y", {param.p2(), param.q2()}}};
}

}  // namespace

CurveInversionResult curve_properness(const PlaneCurveParam& param) {
  CurveInversionResult r;
  r.sylvester = build_sylvester(param);
  const std::size_t d = r.sylvester.rows();
  r.determinant = det_fraction_free(r.sylvester);

  const std::size_t last[] = {d - 1};
  const SignedMinorVector minors = signed_maximal_minors(r.sylvester.submatrix({}, last));
  r.minors.assign(minors.values().begin(), minors.values().end());

  Polynomial expansion(rings::curve_xy());
  for (std::size_t i = 0; i < d; ++i) {
    const Polynomial& c = r.sylvester(i, d - 1);
    if (!c.is_zero() && !minors[i].is_zero()) expansion += c * minors[i];
  }
  if ((d - 1) % 2 == 1) expansion = -expansion;
  r.determinant_identity_holds = expansion == r.determinant;

  r.gcd_of_minors = gcd(minors.values());
  r.implicit_equation = r.determinant.is_zero() ? r.determinant : r.determinant.primitive();
  r.proper = r.gcd_of_minors.is_unit();
  if (!r.proper) return r;

  for (std::size_t i = 1; i < d; ++i) {
    if (!divides(r.implicit_equation, minors[i])) {
      r.chosen_index = i;
      r.inverse = std::pair{minors[i - 1], minors[i]};
      break;
    }
  }
  return r;
}

bool curve_inverse_check(const PlaneCurveParam& param, const Polynomial& numerator, const Polynomial& denominator) {
  const RingPtr& ring = rings::curve_t();
  const std::array<Polynomial, 2> pair{numerator.embed(rings::curve_xy()), denominator.embed(rings::curve_xy())};
  const auto images = substitute_fractions(pair, curve_bindings(param), ring);
  if (images[1].is_zero()) return false;
  return (images[0] - Polynomial::variable(ring, "t") * images[1]).is_zero();
}

bool curve_inverse_check(const PlaneCurveParam& param, const CurveInversionResult& result) {
  if (!result.inverse) return false;
  return curve_inverse_check(param, result.inverse->first, result.inverse->second);
}

bool curve_implicit_check(const PlaneCurveParam& param, const Polynomial& c) {
  if (c.is_zero()) throw DomainError("the zero polynomial is not an implicit equation");
  const std::array<Polynomial, 1> one{c.embed(rings::curve_xy())};
  return substitute_fractions(one, curve_bindings(param), rings::curve_t())[0].is_zero();
}

}  // namespace birat
