#include "cli/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "birat/poly_io.hpp"

namespace birat::cli {

namespace {

bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool blank(const std::string& s, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isspace(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::multimap<std::string, Field> parse_fields(const std::string& text) {
  std::multimap<std::string, Field> fields;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line, 0, line.size())) continue;

    struct Key {
      std::string name;
      std::size_t start;
      std::size_t colon;
    };
    std::vector<Key> keys;
    for (std::size_t c = line.find(':'); c != std::string::npos; c = line.find(':', c + 1)) {
      std::size_t end = c;
      while (end > 0 && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
      std::size_t start = end;
      while (start > 0 && is_ident(line[start - 1])) --start;
      if (start == end) throw ParseError("missing key before ':'", line_no, c + 1);
      keys.push_back({line.substr(start, end - start), start, c});
    }
    if (keys.empty()) throw ParseError("expected 'key: value'", line_no, 1);
    if (!blank(line, 0, keys.front().start)) {
      throw ParseError("unexpected text before key '" + keys.front().name + "'", line_no, 1);
    }
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const std::size_t from = keys[k].colon + 1;
      const std::size_t to = k + 1 < keys.size() ? keys[k + 1].start : line.size();
      std::size_t a = from;
      while (a < to && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      std::size_t b = to;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      fields.emplace(keys[k].name, Field{line.substr(a, b - a), line_no, a + 1});
    }
  }
  return fields;
}

namespace {

class Reader {
 public:
  explicit Reader(std::multimap<std::string, Field> fields) : fields_(std::move(fields)) {}

  bool has(const std::string& key) const { return fields_.contains(key); }

  const Field& field(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end()) throw InputError("missing key '" + key + "'");
    if (fields_.count(key) > 1) {
      throw ParseError("key '" + key + "' given more than once", std::next(it)->second.line, 1);
    }
    return it->second;
  }

  std::string word(const std::string& key, const std::string& fallback = "") const {
    return has(key) ? field(key).value : fallback;
  }

  Polynomial poly(const std::string& key, const RingPtr& ring) const {
    const Field& f = field(key);
    return parse_polynomial(f.value, ring, f.line, f.column - 1);
  }

  std::optional<Polynomial> optional_poly(const std::string& key, const RingPtr& ring) const {
    if (!has(key)) return std::nullopt;
    return poly(key, ring);
  }

  std::vector<Field> all(const std::string& key) const {
    std::vector<Field> out;
    auto [lo, hi] = fields_.equal_range(key);
    for (auto it = lo; it != hi; ++it) out.push_back(it->second);
    return out;
  }

 private:
  std::multimap<std::string, Field> fields_;
};

// Comma-separated polynomials of one field, each parsed with its own column.
std::vector<Polynomial> poly_list(const Field& f, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = f.value.find(',', start);
    const std::string item = f.value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (blank(item, 0, item.size())) throw ParseError("empty entry in list", f.line, f.column + start);
    out.push_back(parse_polynomial(item, ring, f.line, f.column - 1 + start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const RingPtr& affine_t() {
  static const RingPtr r = make_ring({"t1", "t2"});
  return r;
}

const RingPtr& affine_x() {
  static const RingPtr r = make_ring({"X1", "X2", "X3"});
  return r;
}

CurveInput read_curve(const Reader& in) {
  const RingPtr& t = rings::curve_t();
  const RingPtr& xy = rings::curve_xy();
  PlaneCurveParam param(in.poly("p1", t), in.poly("q1", t), in.poly("p2", t), in.poly("q2", t));
  return CurveInput{std::move(param), in.optional_poly("num", xy), in.optional_poly("den", xy),
                    in.optional_poly("implicit", xy)};
}

SurfaceInput read_surface(const Reader& in) {
  const std::string convention = in.word("convention", "projective");
  if (convention != "projective" && convention != "affine") {
    const Field& f = in.field("convention");
    throw ParseError("convention must be 'projective' or 'affine'", f.line, f.column);
  }
  const bool affine = convention == "affine";
  const RingPtr& x_ring = affine ? affine_x() : rings::surface_x();

  std::optional<std::array<Polynomial, 3>> psi;
  if (in.has("psi1") || in.has("psi2") || in.has("psi3")) {
    std::array<Polynomial, 3> parts{in.poly("psi1", x_ring), in.poly("psi2", x_ring), in.poly("psi3", x_ring)};
    for (auto& p : parts) p = p.embed(rings::surface_x());
    if (affine) {
      int degree = 0;
      for (const auto& p : parts) degree = std::max(degree, p.total_degree());
      for (auto& p : parts) p = homogenize(p, "X4", degree);
    }
    psi = parts;
  }
  std::optional<Polynomial> implicit;
  if (auto f = in.optional_poly("implicit", x_ring)) {
    implicit = affine ? homogenize(f->embed(rings::surface_x()), "X4", f->total_degree()) : f->embed(rings::surface_x());
  }

  if (!affine) {
    const RingPtr& t = rings::surface_t();
    SurfaceParam param({in.poly("p1", t), in.poly("p2", t), in.poly("p3", t), in.poly("p4", t)});
    return SurfaceInput{std::move(param), false, false, psi, implicit};
  }
  if (in.has("p4")) throw InputError("affine surfaces take p1, p2, p3 and denominators q or q1, q2, q3");
  const RingPtr& t = affine_t();
  const std::array<Polynomial, 3> num{in.poly("p1", t), in.poly("p2", t), in.poly("p3", t)};
  std::array<Polynomial, 3> den{Polynomial::constant(t, 1), Polynomial::constant(t, 1), Polynomial::constant(t, 1)};
  if (in.has("q")) {
    if (in.has("q1") || in.has("q2") || in.has("q3")) throw InputError("give either q or q1, q2, q3");
    den.fill(in.poly("q", t));
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string key = "q" + std::to_string(i + 1);
      if (in.has(key)) den[i] = in.poly(key, t);
    }
  }
  const bool shared = den[0] == den[1] && den[1] == den[2];
  SurfaceParam param = SurfaceParam::from_affine(num, den);
  return SurfaceInput{std::move(param), true, shared, psi, implicit};
}

Monomial as_monomial(const Polynomial& p, const Field& f) {
  if (p.size() != 1 || p.leading_coefficient() != 1) {
    throw ParseError("row index entries must be monomials such as t1^2 or 1", f.line, f.column);
  }
  return p.leading_monomial();
}

MatrixInput read_matrix(const Reader& in) {
  SurfaceInput surface = read_surface(in);
  const std::string kind = in.word("matrix_kind");
  MatrixKind mk;
  if (kind == "implicitization") {
    mk = MatrixKind::implicitization_candidate;
  } else if (kind == "inversion") {
    mk = MatrixKind::inversion_candidate;
  } else {
    throw InputError("matrix_kind must be 'implicitization' or 'inversion'");
  }
  const RingPtr& t_ring = surface.affine ? affine_t() : rings::surface_t();
  const RingPtr& x_ring = surface.affine ? affine_x() : rings::surface_x();

  const Field& rows_field = in.field("rows");
  std::vector<Monomial> rows;
  for (const auto& p : poly_list(rows_field, t_ring)) rows.push_back(as_monomial(p, rows_field));

  const auto row_fields = in.all("row");
  if (row_fields.size() != rows.size()) {
    throw InputError(std::to_string(row_fields.size()) + " 'row:' lines for " + std::to_string(rows.size()) +
                     " row monomials");
  }
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& f : row_fields) entries.push_back(poly_list(f, x_ring));
  const PolyMatrix m = PolyMatrix::from_rows(x_ring, entries);

  std::optional<std::size_t> marked;
  if (in.has("marked")) {
    const Field& f = in.field("marked");
    try {
      marked = std::stoul(f.value);
    } catch (const std::exception&) {
      throw ParseError("marked must be a column index", f.line, f.column);
    }
  }
  const std::string certified = in.word("certified", "false");
  if (certified != "true" && certified != "false") throw InputError("certified must be 'true' or 'false'");

  if (surface.affine) {
    std::vector<Monomial> affine_rows;
    for (const auto& r : rows) affine_rows.emplace_back(std::vector<std::uint32_t>{r[0], r[1]});
    return MatrixInput{ElimMatrix::from_affine(m, affine_rows, mk, marked), std::move(surface), certified == "true"};
  }
  return MatrixInput{ElimMatrix(m, rows, mk, marked), std::move(surface), certified == "true"};
}

}  // namespace

Input parse_input(const std::string& text) {
  Reader in(parse_fields(text));
  const std::string kind = in.word("kind");
  if (kind == "curve") return read_curve(in);
  if (kind == "surface") return read_surface(in);
  if (kind == "matrix") return read_matrix(in);
  if (kind.empty()) throw InputError("missing key 'kind'");
  const Field& f = in.field("kind");
  throw ParseError("kind must be 'curve', 'surface' or 'matrix'", f.line, f.column);
}

Input parse_input_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_input(buffer.str());
}

}  // namespace birat::cli
