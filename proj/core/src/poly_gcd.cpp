// Multivariate gcd by recursive content / primitive-part reduction. The
// primitive parts are combined with a primitive pseudo-remainder sequence in
// the main variable; a specialization test proves coprimality early.

#include <algorithm>
#include <optional>
#include <random>

#include "birat/errors.hpp"
#include "birat/polynomial.hpp"

namespace birat {

namespace {

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

std::optional<std::size_t> main_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = 0; v < a.ring()->size(); ++v) {
    if (a.involves(v) || b.involves(v)) return v;
  }
  return std::nullopt;
}

Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& other) {
  Monomial g = mono.leading_monomial();
  for (const auto& [m, c] : other.terms()) {
    for (std::size_t i = 0; i < g.size(); ++i) g.set(i, std::min(g[i], m[i]));
  }
  return Polynomial::term(mono.ring(), g, 1);
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.ring());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  return exact_divide(p, content_in(p, var)).primitive();
}

/// Pseudo-remainder of a by b in `var`: lc(b)^k * a reduced until deg < deg(b).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const auto b_coeffs = b.coefficients_in(var);
  const Polynomial& lcb = b_coeffs.back();
  Polynomial r = a;
  int dr = r.degree_in(var);
  while (!r.is_zero() && dr >= db) {
    const Polynomial lcr = r.coefficients_in(var).back();
    Monomial shift(a.ring()->size());
    shift.set(var, static_cast<std::uint32_t>(dr - db));
    r = lcb * r - lcr * Polynomial::term(a.ring(), shift) * b;
    r = r.primitive();
    dr = r.degree_in(var);
  }
  return r;
}

/// Proves gcd(a, b) has degree 0 in `var` by specializing the other variables
/// at a point where both leading coefficients survive. Returns false when the
/// test is inconclusive, never a false positive.
bool coprime_by_specialization(const Polynomial& a, const Polynomial& b, std::size_t var) {
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < a.ring()->size(); ++v) {
    if (v != var && (a.involves(v) || b.involves(v))) others.push_back(v);
  }
  if (others.empty()) return false;
  const Polynomial lca = a.coefficients_in(var).back();
  const Polynomial lcb = b.coefficients_in(var).back();
  std::mt19937_64 gen(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> dist(-97, 97);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> point(a.ring()->size(), Rational(0));
    for (auto v : others) point[v] = dist(gen);
    point[var] = 0;
    auto specialize = [&](const Polynomial& p) {
      Polynomial s = p;
      for (auto v : others) s = s.evaluate_at(v, point[v]);
      return s;
    };
    if (specialize(lca).is_zero() || specialize(lcb).is_zero()) continue;
    if (gcd_impl(specialize(a), specialize(b)).is_constant()) return true;
  }
  return false;
}

Polynomial gcd_primitive(const Polynomial& pa, const Polynomial& pb, std::size_t var) {
  if (coprime_by_specialization(pa, pb, var)) return one(pa.ring());
  Polynomial a = pa;
  Polynomial b = pb;
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b.primitive();
    if (r.degree_in(var) == 0) return one(pa.ring());
    a = std::move(b);
    b = primitive_part(r, var);
  }
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return one(a.ring());
  if (a.size() == 1) return monomial_gcd(a, b);
  if (b.size() == 1) return monomial_gcd(b, a);

  const std::size_t var = *main_variable(a, b);
  const bool a_in = a.involves(var);
  const bool b_in = b.involves(var);
  const Polynomial ca = a_in ? content_in(a, var) : a;
  const Polynomial cb = b_in ? content_in(b, var) : b;
  const Polynomial c = gcd_impl(ca, cb);
  if (!a_in || !b_in) return c.primitive();

  const Polynomial pa = exact_divide(a, ca).primitive();
  const Polynomial pb = exact_divide(b, cb).primitive();
  return (c * gcd_primitive(pa, pb, var)).primitive();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingError("gcd: ring mismatch");
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  return gcd_impl(a, b);
}

Polynomial gcd(std::span<const Polynomial> polys) {
  std::optional<Polynomial> g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g ? gcd(*g, p) : p.primitive();
    if (g->is_constant()) break;
  }
  if (!g) throw DomainError("gcd of zero polynomials only");
  return *g;
}

}  // namespace birat
