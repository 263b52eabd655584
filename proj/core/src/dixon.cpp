#include "birat/dixon.hpp"

#include <algorithm>
#include <map>

#include "birat/errors.hpp"
#include "birat/poly_io.hpp"

namespace birat {

const RingPtr& dixon_ring() {
  static const RingPtr r = make_ring({"t1", "t2", "a", "b", "X1", "X2", "X3"});
  return r;
}

namespace {

constexpr std::size_t kT1 = 0, kT2 = 1, kA = 2, kB = 3, kX = 4;

}  // namespace

DixonSystem::DixonSystem(std::array<Polynomial, 3> f)
    : f_{f[0].embed(dixon_ring()), f[1].embed(dixon_ring()), f[2].embed(dixon_ring())},
      q_(dixon_ring()),
      p_{Polynomial(dixon_ring()), Polynomial(dixon_ring()), Polynomial(dixon_ring())},
      degree_(0) {
  for (std::size_t i = 0; i < 3; ++i) {
    const Polynomial& fi = f_[i];
    const std::string label = "F" + std::to_string(i + 1);
    if (fi.involves(kA) || fi.involves(kB)) throw DixonInapplicableError(label + " uses the variables a or b");
    for (std::size_t k = 0; k < 3; ++k) {
      const int deg = fi.degree_in(kX + k);
      if (k == i ? deg != 1 : deg != 0) {
        throw DixonInapplicableError(label + " must be linear in X" + std::to_string(i + 1) +
                                     " and free of the other coordinates");
      }
    }
    const auto parts = fi.coefficients_in(kX + i);
    if (i == 0) {
      q_ = parts[1];
    } else if (!(parts[1] == q_)) {
      throw DixonInapplicableError("the equations do not share the denominator " + to_string(q_));
    }
    p_[i] = -parts[0];
    const int deg_t = fi.degree_in_range(kT1, kT2 + 1);
    if (deg_t < 1) throw DixonInapplicableError(label + " does not involve t1 or t2");
    degree_ = std::max(degree_, static_cast<unsigned>(deg_t));
  }
}

DixonSystem DixonSystem::from_affine(const Polynomial& q, const std::array<Polynomial, 3>& p) {
  const RingPtr& r = dixon_ring();
  const Polynomial qq = q.embed(r);
  std::array<Polynomial, 3> f{Polynomial(r), Polynomial(r), Polynomial(r)};
  for (std::size_t i = 0; i < 3; ++i) {
    f[i] = qq * Polynomial::variable(r, "X" + std::to_string(i + 1)) - p[i].embed(r);
  }
  return DixonSystem(std::move(f));
}

DixonSystem DixonSystem::from_param(const SurfaceParam& param) {
  const RingPtr& r = dixon_ring();
  auto affine = [&](std::size_t i) { return dehomogenize(param.p(i), "t3").embed(r); };
  return from_affine(affine(3), {affine(0), affine(1), affine(2)});
}

SurfaceParam DixonSystem::param() const {
  const RingPtr& r = rings::surface_t();
  const Polynomial q = q_.embed(r);
  return SurfaceParam::from_affine({p_[0].embed(r), p_[1].embed(r), p_[2].embed(r)}, {q, q, q});
}

Polynomial cayley_quotient(const DixonSystem& sys) {
  const RingPtr& r = dixon_ring();
  const Polynomial a = Polynomial::variable(r, "a");
  const Polynomial b = Polynomial::variable(r, "b");
  PolyMatrix cayley(r, 3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const Polynomial& f = sys.f(j);
    const Polynomial shifted = substitute(f, {{"t1", a}}, r);
    cayley.set(0, j, f);
    cayley.set(1, j, shifted);
    cayley.set(2, j, substitute(shifted, {{"t2", b}}, r));
  }
  const Polynomial det = det_fraction_free(cayley);
  const Polynomial divisor =
      (Polynomial::variable(r, "t1") - a) * (Polynomial::variable(r, "t2") - b);
  Polynomial q(r);
  try {
    q = exact_divide(det, divisor);
  } catch (const DivisionError& e) {
    throw DixonInapplicableError(std::string("Cayley determinant is not divisible: ") + e.what());
  }
  if (q.is_zero()) throw DixonInapplicableError("the Cayley quotient vanishes identically");
  return q;
}

std::vector<Monomial> affine_monomials(unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= max_degree; ++k) {
    for (unsigned i = k + 1; i-- > 0;) out.emplace_back(std::vector<std::uint32_t>{i, k - i});
  }
  return out;
}

namespace {

std::string label_of(const Monomial& m, const char* first, const char* second) {
  const auto ring = make_ring({first, second});
  return to_string(m, *ring);
}

}  // namespace

DixonMatrix dixon_matrix(const DixonSystem& sys) {
  const RingPtr& r = dixon_ring();
  const unsigned d = sys.degree();
  if (d < 2) throw DixonInapplicableError("a system of degree 1 gives a 1x1 matrix with no inverse");
  const auto columns = affine_monomials(2 * d - 2);
  std::map<Monomial, std::size_t, GrlexLess> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  auto t_part = [](const Monomial& m) { return Monomial(std::vector<std::uint32_t>{m[kT1], m[kT2]}); };
  auto ab_part = [](const Monomial& m) { return Monomial(std::vector<std::uint32_t>{m[kA], m[kB]}); };
  auto x_part = [&](const Monomial& m) {
    Monomial x(rings::surface_x()->size());
    for (std::size_t k = 0; k < 3; ++k) x.set(k, m[kX + k]);
    return x;
  };

  std::vector<std::vector<Polynomial>> rows;
  std::vector<std::string> labels;
  auto add_row = [&](const Polynomial& p, std::string label) {
    std::vector<Polynomial> row(columns.size(), Polynomial(rings::surface_x()));
    for (const auto& [m, c] : p.terms()) {
      auto it = column_of.find(t_part(m));
      if (it == column_of.end()) throw DixonInapplicableError("support outside the column monomials");
      row[it->second] += Polynomial::term(rings::surface_x(), x_part(m), c);
    }
    rows.push_back(std::move(row));
    labels.push_back(std::move(label));
  };

  if (d >= 2) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& beta : affine_monomials(d - 2)) {
        Monomial full(r->size());
        full.set(kT1, beta[0]);
        full.set(kT2, beta[1]);
        const std::string shift = beta.is_one() ? "" : label_of(beta, "t1", "t2") + "*";
        add_row(Polynomial::term(r, full) * sys.f(i), shift + "F" + std::to_string(i + 1));
      }
    }
  }

  const Polynomial quotient = cayley_quotient(sys);
  std::map<Monomial, Polynomial, GrlexLess> by_ab;
  for (const auto& [m, c] : quotient.terms()) {
    Monomial rest = m;
    rest.set(kA, 0);
    rest.set(kB, 0);
    auto [it, inserted] = by_ab.try_emplace(ab_part(m), r);
    it->second += Polynomial::term(r, rest, c);
  }
  const auto ab_rows = affine_monomials(d - 1);
  std::size_t dropped = 0;
  for (const auto& [ab, part] : by_ab) {
    if (ab.degree() > d - 1) ++dropped;
  }
  for (const auto& ab : ab_rows) {
    auto it = by_ab.find(ab);
    add_row(it == by_ab.end() ? Polynomial(r) : it->second, label_of(ab, "a", "b"));
  }

  if (rows.size() != columns.size()) {
    throw DixonInapplicableError(std::to_string(rows.size()) + " rows for " + std::to_string(columns.size()) +
                                 " columns");
  }
  PolyMatrix matrix = PolyMatrix::from_rows(rings::surface_x(), rows);
  ElimMatrix candidate =
      ElimMatrix::from_affine(matrix.transpose(), columns, MatrixKind::implicitization_candidate, columns.size() - 1);
  if (det_fraction_free(candidate.matrix()).is_zero()) {
    throw SingularMatrixError("the Dixon matrix is singular (base points or a degenerate image)");
  }
  return DixonMatrix{std::move(matrix), columns, std::move(labels), std::move(candidate), dropped};
}

}  // namespace birat
