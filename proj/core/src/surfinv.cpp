#include <algorithm>

#include "birat/errors.hpp"
#include "birat/surface.hpp"
#include "birat/verify.hpp"

namespace birat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::proper: return "proper";
    case Verdict::not_proper: return "not_proper";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::gcd_constant_and_certified_matrix: return "gcd_constant_and_certified_matrix";
    case Evidence::composition_verified: return "composition_verified";
    case Evidence::gcd_nonconstant_with_certified_matrix: return "gcd_nonconstant_with_certified_matrix";
    case Evidence::uncertified: return "uncertified";
  }
  return "uncertified";
}

InverseMap InverseMap::reduced() const {
  const std::array<Polynomial, 3> parts{psi1, psi2, psi3};
  const Polynomial g = gcd(std::span<const Polynomial>(parts));
  if (g.is_unit()) return *this;
  return InverseMap{exact_divide(psi1, g), exact_divide(psi2, g), exact_divide(psi3, g), beta, certified};
}

namespace {

std::optional<InverseMap> pick(const SignedMinorVector& minors, const BetaTriple& beta) {
  if (minors[beta.i1].is_zero() && minors[beta.i2].is_zero() && minors[beta.i3].is_zero()) return std::nullopt;
  return InverseMap{minors[beta.i1], minors[beta.i2], minors[beta.i3], beta, false};
}

InverseMap invert_with_minors(const ElimMatrix& mat, const SignedMinorVector& minors, const BetaTriple& beta) {
  const auto valid = all_beta_triples(mat.row_monomials());
  if (std::find(valid.begin(), valid.end(), beta) == valid.end()) {
    throw NoBetaTripleError("rows (" + std::to_string(beta.i1) + ", " + std::to_string(beta.i2) + ", " +
                            std::to_string(beta.i3) + ") do not form a beta triple");
  }
  if (auto inv = pick(minors, beta)) return *inv;
  for (const auto& other : valid) {
    if (other == beta) continue;
    if (auto inv = pick(minors, other)) return *inv;
  }
  throw DegenerateMinorsError("every beta triple selects three vanishing minors");
}

}  // namespace

InverseMap invert_from_inversion_matrix(const ElimMatrix& mat, const BetaTriple& beta) {
  if (mat.kind() != MatrixKind::inversion_candidate) throw ShapeError("expected an inversion candidate");
  return invert_with_minors(mat, signed_maximal_minors(mat.matrix()), beta);
}

InverseMap invert_from_inversion_matrix(const ElimMatrix& mat) {
  return invert_from_inversion_matrix(mat, find_beta_triple(mat.row_monomials()));
}

namespace {

Polynomial expand_along_erased_column(const ElimMatrix& stripped, const SignedMinorVector& minors) {
  Polynomial sum(rings::surface_x());
  const auto& c = stripped.erased_column();
  for (std::size_t i = 0; i < minors.size(); ++i) {
    if (!c[i].is_zero() && !minors[i].is_zero()) sum += c[i] * minors[i];
  }
  // Laplace along column k carries the sign (-1)^k on top of the minor signs.
  return stripped.marked_column().value_or(0) % 2 == 0 ? sum : -sum;
}

unsigned lowest_power(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return 0;
  unsigned k = p.terms().begin()->first[var];
  for (const auto& [m, c] : p.terms()) k = std::min<unsigned>(k, m[var]);
  return k;
}

bool divides(const Polynomial& d, const Polynomial& p) {
  try {
    exact_divide(p, d);
    return true;
  } catch (const DivisionError&) {
    return false;
  }
}

std::optional<InverseMap> try_inverse(const ElimMatrix& stripped, const SignedMinorVector& minors,
                                      const SurfaceParam& param, PropernessReport& report) {
  try {
    InverseMap inv = invert_with_minors(stripped, minors, find_beta_triple(stripped.row_monomials()));
    inv.certified = verify_inverse(param, inv);
    return inv;
  } catch (const NoBetaTripleError& e) {
    report.notes.push_back(std::string("no inversion: ") + e.what());
  } catch (const DegenerateMinorsError& e) {
    report.notes.push_back("marked column " + std::to_string(stripped.marked_column().value_or(0)) + ": " +
                           e.what());
  }
  return std::nullopt;
}

}  // namespace

PropernessReport surface_properness(const ElimMatrix& mat, const SurfaceParam& param, bool certified) {
  if (mat.kind() != MatrixKind::implicitization_candidate) throw ShapeError("expected an implicitization candidate");
  PropernessReport report;
  report.marked_column = mat.marked_column().value_or(0);
  report.determinant = det_fraction_free(mat.matrix());
  if (report.determinant.is_zero()) throw SingularMatrixError("the candidate matrix has zero determinant");

  bool all_follow = true;
  for (std::size_t j = 0; j < mat.matrix().cols(); ++j) {
    const bool follows = follows_parameterization(mat.column_polynomial(j), param);
    if (!follows && j != report.marked_column) {
      throw NotFollowingError("column " + std::to_string(j) + " does not vanish on the parameterization");
    }
    all_follow = all_follow && follows;
  }

  const ElimMatrix stripped = strip_marked_column(mat);
  const SignedMinorVector minors = signed_maximal_minors(stripped.matrix());
  report.minors.assign(minors.values().begin(), minors.values().end());
  report.determinant_identity_holds = expand_along_erased_column(stripped, minors) == report.determinant;
  if (!report.determinant_identity_holds) {
    throw InvariantError("determinant differs from its expansion along the marked column");
  }
  report.gcd_of_minors = gcd(minors.values());
  report.gcd_divides_determinant = divides(report.gcd_of_minors, report.determinant);
  if (!param.p(3).is_zero()) {
    // X4 cannot divide the implicit equation when p4 != 0, so such factors
    // only come from homogenizing the columns.
    const std::size_t x4 = 3;
    if (auto k = lowest_power(report.gcd_of_minors, x4); k > 0) {
      report.gcd_of_minors = exact_divide(report.gcd_of_minors, Polynomial::variable(rings::surface_x(), "X4").pow(k));
      report.notes.push_back("removed the factor X4^" + std::to_string(k) + " from the gcd");
    }
  }
  const bool unit_gcd = report.gcd_of_minors.is_unit();

  report.inverse = try_inverse(stripped, minors, param, report);
  auto verified = [&] { return report.inverse && report.inverse->certified; };
  if (!verified() && all_follow) {
    for (std::size_t k = 0; k < mat.matrix().cols() && !verified(); ++k) {
      if (k == report.marked_column) continue;
      const ElimMatrix alt = strip_marked_column(ElimMatrix(mat.matrix(), mat.row_monomials(), mat.kind(), k));
      auto inv = try_inverse(alt, signed_maximal_minors(alt.matrix()), param, report);
      if (inv && inv->certified) {
        report.notes.push_back("inverse taken with column " + std::to_string(k) + " marked");
        report.inverse = inv;
      } else if (!report.inverse) {
        report.inverse = inv;
      }
    }
  }

  if (report.inverse && report.inverse->certified) {
    report.verdict = Verdict::proper;
    report.evidence = Evidence::composition_verified;
  } else if (certified && unit_gcd) {
    report.verdict = Verdict::proper;
    report.evidence = Evidence::gcd_constant_and_certified_matrix;
  } else if (certified) {
    report.verdict = Verdict::not_proper;
    report.evidence = Evidence::gcd_nonconstant_with_certified_matrix;
    report.power_of_implicit_equation = true;
    report.notes.push_back("det = c*F^delta with delta > 1");
  } else {
    report.verdict = Verdict::inconclusive;
    report.evidence = Evidence::uncertified;
    if (!unit_gcd) report.notes.push_back("gcd of the maximal minors is not constant");
  }
  return report;
}

}  // namespace birat
