#include "cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <variant>

#include <json.hpp>

#include "birat/curve.hpp"
#include "birat/dixon.hpp"
#include "birat/movsurf.hpp"
#include "birat/poly_io.hpp"
#include "birat/surface.hpp"
#include "birat/verify.hpp"
#include "cli/input.hpp"

namespace birat::cli {

using json = nlohmann::ordered_json;

namespace {

// Polynomials are printed in affine coordinates (t3 = X4 = 1) when the
// input used the affine convention.
struct Display {
  bool affine = false;

  std::string poly(const Polynomial& p) const {
    if (!affine) return to_string(p);
    return to_string(dehomogenize(dehomogenize(p, "t3"), "X4"));
  }

  json polys(const std::vector<Polynomial>& ps) const {
    json out = json::array();
    for (const auto& p : ps) out.push_back(poly(p));
    return out;
  }

  json matrix(const PolyMatrix& m, const std::vector<std::string>& row_labels) const {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(polys(m.row(r)));
    json out;
    out["row_monomials"] = row_labels;
    out["entries"] = entries;
    return out;
  }

  json elim_matrix(const ElimMatrix& mat) const {
    std::vector<std::string> rows;
    for (const auto& mono : mat.row_monomials()) rows.push_back(poly(Polynomial::term(rings::surface_t(), mono)));
    json out;
    out["kind"] = mat.kind() == MatrixKind::inversion_candidate ? "inversion" : "implicitization";
    out["marked_column"] = mat.marked_column() ? json(*mat.marked_column()) : json(nullptr);
    json body = matrix(mat.matrix(), rows);
    out["row_monomials"] = body["row_monomials"];
    out["entries"] = body["entries"];
    return out;
  }

  json inverse(const InverseMap& psi) const {
    const InverseMap r = psi.reduced();
    json out;
    out["psi"] = polys({r.psi1, r.psi2, r.psi3});
    out["beta"] = {psi.beta.i1, psi.beta.i2, psi.beta.i3};
    return out;
  }
};

int verdict_status(Verdict v) { return v == Verdict::inconclusive ? 2 : 0; }

json properness(const PropernessReport& rep, const Display& show) {
  json out;
  out["verdict"] = to_string(rep.verdict);
  out["evidence"] = to_string(rep.evidence);
  out["determinant"] = show.poly(rep.determinant);
  out["marked_column"] = rep.marked_column;
  out["minors"] = show.polys(rep.minors);
  out["gcd_of_minors"] = show.poly(rep.gcd_of_minors);
  out["inverse"] = rep.inverse && rep.verdict == Verdict::proper ? show.inverse(*rep.inverse) : json(nullptr);
  out["certification"] = {
      {"determinant_identity", rep.determinant_identity_holds},
      {"gcd_divides_determinant", rep.gcd_divides_determinant},
      {"power_of_implicit_equation", rep.power_of_implicit_equation},
      {"composition_verified", rep.evidence == Evidence::composition_verified},
  };
  out["notes"] = rep.notes;
  return out;
}

void merge(json& into, const json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

template <class T>
const T& expect(const Input& in, const char* command, const char* kind) {
  if (const T* v = std::get_if<T>(&in)) return *v;
  throw InputError(std::string(command) + " needs a '" + kind + "' input file");
}

const SurfaceInput& surface_of(const Input& in, const char* command) {
  if (const auto* s = std::get_if<SurfaceInput>(&in)) return *s;
  if (const auto* m = std::get_if<MatrixInput>(&in)) return m->surface;
  throw InputError(std::string(command) + " needs a 'surface' input file");
}

std::pair<json, int> curve_invert(const Input& in) {
  const CurveInput& c = expect<CurveInput>(in, "curve-invert", "curve");
  const Display show;
  const CurveInversionResult r = curve_properness(c.param);
  const bool composed = r.inverse && curve_inverse_check(c.param, r);

  std::vector<std::string> rows;
  const int size = c.param.m() + c.param.n();
  for (int k = size - 1; k >= 0; --k) {
    rows.push_back(to_string(Polynomial::variable(rings::curve_t(), "t").pow(static_cast<unsigned>(k))));
  }
  const auto& orig = c.param.original();
  json out;
  out["command"] = "curve-invert";
  out["verdict"] = r.proper && !composed ? "inconclusive" : r.proper ? "proper" : "not_proper";
  out["parameterization"] = {{"p1", show.poly(c.param.p1())}, {"q1", show.poly(c.param.q1())},
                             {"p2", show.poly(c.param.p2())}, {"q2", show.poly(c.param.q2())},
                             {"reduced_from_input", c.param.was_reduced()},
                             {"input", show.polys({orig.begin(), orig.end()})}};
  out["matrix"] = show.matrix(r.sylvester, rows);
  out["determinant"] = show.poly(r.determinant);
  out["implicit_equation"] = show.poly(r.implicit_equation);
  out["minors"] = show.polys(r.minors);
  out["gcd_of_minors"] = show.poly(r.gcd_of_minors);
  if (r.inverse) {
    out["inverse"] = {{"numerator", show.poly(r.inverse->first)},
                      {"denominator", show.poly(r.inverse->second)},
                      {"chosen_index", *r.chosen_index}};
  } else {
    out["inverse"] = nullptr;
  }
  out["certification"] = {{"determinant_identity", r.determinant_identity_holds},
                          {"composition_verified", composed}};
  return {out, r.proper && !composed ? 2 : 0};
}

std::optional<ElimMatrix> remark(const ElimMatrix& mat, std::optional<std::size_t> marked) {
  if (!marked) return std::nullopt;
  return ElimMatrix(mat.matrix(), mat.row_monomials(), mat.kind(), marked);
}

std::pair<json, int> supplied_matrix(const MatrixInput& mi, const JobSpec& job) {
  const Display show{mi.surface.affine};
  const ElimMatrix mat = remark(mi.matrix, job.marked_column).value_or(mi.matrix);
  json out;
  out["command"] = "surface-invert";
  out["route"] = "supplied_matrix";
  out["matrix"] = show.elim_matrix(mat);
  if (mat.kind() == MatrixKind::implicitization_candidate) {
    const PropernessReport rep = surface_properness(mat, mi.surface.param, mi.certified);
    merge(out, properness(rep, show));
    return {out, verdict_status(rep.verdict)};
  }
  const InverseMap psi = invert_from_inversion_matrix(mat);
  const bool composed = verify_inverse(mi.surface.param, psi, job.seed);
  out["verdict"] = composed ? "proper" : "inconclusive";
  out["evidence"] = composed ? to_string(Evidence::composition_verified) : to_string(Evidence::uncertified);
  out["inverse"] = show.inverse(psi);
  out["certification"] = {{"composition_verified", composed}};
  return {out, composed ? 0 : 2};
}

std::pair<json, int> surface_invert(const Input& in, const JobSpec& job) {
  if (const auto* mi = std::get_if<MatrixInput>(&in)) return supplied_matrix(*mi, job);
  const SurfaceInput& s = expect<SurfaceInput>(in, "surface-invert", "surface");
  const Display show{s.affine};
  json out;
  out["command"] = "surface-invert";
  std::vector<std::string> fallback;

  if (s.affine && s.shared_denominator) {
    try {
      const DixonMatrix d = dixon_matrix(DixonSystem::from_param(s.param));
      const ElimMatrix mat = remark(d.candidate, job.marked_column).value_or(d.candidate);
      const PropernessReport rep = surface_properness(mat, s.param);
      out["route"] = "dixon";
      out["matrix"] = show.elim_matrix(mat);
      merge(out, properness(rep, show));
      return {out, verdict_status(rep.verdict)};
    } catch (const DixonInapplicableError& e) {
      fallback.push_back(e.qualified_name() + ": " + e.what());
    } catch (const SingularMatrixError& e) {
      fallback.push_back(e.qualified_name() + ": " + e.what());
    }
  }
  const CandidateSearch search = search_implicitization_candidate(s.param, job.m_max, job.marked_column);
  const PropernessReport rep = surface_properness(search.matrix, s.param);
  out["route"] = "moving_surfaces";
  if (!fallback.empty()) out["dixon_fallback"] = fallback.front();
  out["matrix"] = show.elim_matrix(search.matrix);
  merge(out, properness(rep, show));
  return {out, verdict_status(rep.verdict)};
}

std::pair<json, int> moving_matrix(const Input& in, const JobSpec& job) {
  const SurfaceInput& s = surface_of(in, "moving-matrix");
  const Display show{s.affine};
  const CandidateSearch search = search_implicitization_candidate(s.param, job.m_max, job.marked_column);
  const unsigned m = search.matrix.m();

  auto bodies = [](const std::vector<MovingSurface>& surfaces) {
    std::vector<Polynomial> out;
    for (const auto& ms : surfaces) out.push_back(ms.body.base());
    return out;
  };
  const Polynomial det = det_fraction_free(search.matrix.matrix());
  json out;
  out["command"] = "moving-matrix";
  out["m"] = m;
  out["basis"] = {{"planes", show.polys(bodies(moving_surface_basis(s.param, m, 1)))},
                  {"quadrics", show.polys(bodies(moving_surface_basis(s.param, m, 2)))}};
  out["selected"] = show.polys(bodies(search.surfaces));
  out["matrix"] = show.elim_matrix(search.matrix);
  out["determinant"] = show.poly(det);
  out["determinant_vanishes_on_surface"] = !det.is_zero() && verify_implicit(det, s.param);
  return {out, 0};
}

std::pair<json, int> dixon(const Input& in, const JobSpec& job) {
  const SurfaceInput& s = surface_of(in, "dixon");
  const Display show{true};
  const DixonSystem sys = DixonSystem::from_param(s.param);
  const DixonMatrix d = dixon_matrix(sys);

  std::vector<std::string> columns;
  for (const auto& mono : d.column_monomials) columns.push_back(to_string(mono, *sys.denominator().ring()));
  json matrix;
  matrix["row_labels"] = d.row_labels;
  matrix["column_monomials"] = columns;
  json entries = json::array();
  for (std::size_t r = 0; r < d.matrix.rows(); ++r) entries.push_back(show.polys(d.matrix.row(r)));
  matrix["entries"] = entries;

  const ElimMatrix mat = remark(d.candidate, job.marked_column).value_or(d.candidate);
  const PropernessReport rep = surface_properness(mat, s.param);
  json out;
  out["command"] = "dixon";
  out["system"] = {{"denominator", show.poly(sys.denominator())},
                   {"numerators", show.polys({sys.numerator(0), sys.numerator(1), sys.numerator(2)})}};
  out["cayley_quotient"] = show.poly(cayley_quotient(sys));
  out["dixon_matrix"] = matrix;
  out["unused_quotient_rows"] = d.unused_quotient_rows;
  out["matrix"] = show.elim_matrix(mat);
  merge(out, properness(rep, show));
  return {out, verdict_status(rep.verdict)};
}

std::pair<json, int> verify(const Input& in, const JobSpec& job) {
  json out;
  out["command"] = "verify";
  json checks;
  if (const auto* c = std::get_if<CurveInput>(&in)) {
    if (c->numerator.has_value() != c->denominator.has_value()) throw InputError("give both num and den");
    if (c->numerator) checks["inverse"] = curve_inverse_check(c->param, *c->numerator, *c->denominator);
    if (c->implicit) checks["implicit"] = curve_implicit_check(c->param, *c->implicit);
  } else if (const auto* s = std::get_if<SurfaceInput>(&in)) {
    if (s->psi) {
      const InverseMap psi{(*s->psi)[0], (*s->psi)[1], (*s->psi)[2], BetaTriple{0, 0, 0}, false};
      checks["inverse"] = verify_inverse(s->param, psi, job.seed);
    }
    if (s->implicit) checks["implicit"] = verify_implicit(*s->implicit, s->param);
  } else {
    throw InputError("verify needs a 'curve' or 'surface' input file");
  }
  if (checks.empty()) throw InputError("nothing to verify: give num and den, psi1..psi3 or implicit");
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const json& v) { return v.get<bool>(); });
  out["verdict"] = ok ? "verified" : "not_verified";
  out["checks"] = checks;
  return {out, ok ? 0 : 2};
}

void render(const json& j, std::ostream& out, int indent);

void render_grid(const json& m, std::ostream& out, int indent) {
  const json& entries = m["entries"];
  std::vector<std::string> labels;
  if (m.contains("row_labels")) {
    labels = m["row_labels"].get<std::vector<std::string>>();
  } else if (m.contains("row_monomials")) {
    labels = m["row_monomials"].get<std::vector<std::string>>();
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths;
  for (const auto& row : entries) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].get_ref<const std::string&>().size());
    }
  }
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (m.contains("column_monomials")) {
    out << pad << std::string(label_width, ' ') << "   ";
    const auto& cols = m["column_monomials"];
    for (std::size_t c = 0; c < cols.size() && c < widths.size(); ++c) {
      const auto& s = cols[c].get_ref<const std::string&>();
      widths[c] = std::max(widths[c], s.size());
      out << (c ? "  " : "") << s << std::string(widths[c] - s.size(), ' ');
    }
    out << '\n';
  }
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::string label = r < labels.size() ? labels[r] : "";
    out << pad << label << std::string(label_width - label.size(), ' ') << " [ ";
    for (std::size_t c = 0; c < entries[r].size(); ++c) {
      const auto& s = entries[r][c].get_ref<const std::string&>();
      out << (c ? "  " : "") << s << std::string(widths[c] - s.size(), ' ');
    }
    out << " ]\n";
  }
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.contains("entries")) {
      out << pad << key << ":\n";
      json rest = value;
      rest.erase("entries");
      rest.erase("row_labels");
      rest.erase("column_monomials");
      if (!value.contains("row_labels")) rest.erase("row_monomials");
      render(rest, out, indent + 2);
      render_grid(value, out, indent + 2);
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      out << pad << key << ":\n";
      for (const auto& v : value) out << pad << "  - " << v.get<std::string>() << '\n';
    } else if (value.is_array()) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar(value[i]);
      out << "]\n";
    } else {
      out << pad << key << ": " << scalar(value) << '\n';
    }
  }
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::curve_invert, Command::surface_invert, Command::moving_matrix, Command::dixon,
                    Command::verify}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::curve_invert: return "curve-invert";
    case Command::surface_invert: return "surface-invert";
    case Command::moving_matrix: return "moving-matrix";
    case Command::dixon: return "dixon";
    case Command::verify: return "verify";
  }
  return "";
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::pair<json, int> result;
  try {
    const Input in = parse_input_file(job.input_path);
    switch (job.command) {
      case Command::curve_invert: result = curve_invert(in); break;
      case Command::surface_invert: result = surface_invert(in, job); break;
      case Command::moving_matrix: result = moving_matrix(in, job); break;
      case Command::dixon: result = dixon(in, job); break;
      case Command::verify: result = verify(in, job); break;
    }
  } catch (const Error& e) {
    err << "error: " << e.qualified_name() << ": " << e.what() << '\n';
    return 1;
  }
  auto& [report, status] = result;
  if (job.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"total_us", std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count()}};
  }
  if (job.format == Format::structured) {
    out << report.dump(2) << '\n';
  } else {
    render(report, out, 0);
  }
  return status;
}

}  // namespace birat::cli
