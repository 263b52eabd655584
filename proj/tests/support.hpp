#pragma once

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "birat/poly_io.hpp"
#include "birat/polymat.hpp"

namespace birat::testing {

inline Polynomial poly(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline PolyMatrix matrix(std::initializer_list<std::initializer_list<const char*>> rows, const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const char* t : r) out.back().push_back(parse_polynomial(t, ring));
  }
  return PolyMatrix::from_rows(ring, out);
}

/// True when b = c * a for one nonzero rational c shared by every entry.
inline bool equal_up_to_unit(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  if (a.size() != b.size()) return false;
  std::size_t k = 0;
  while (k < a.size() && a[k].is_zero()) ++k;
  if (k == a.size()) return std::all_of(b.begin(), b.end(), [](const Polynomial& p) { return p.is_zero(); });
  if (b[k].is_zero()) return false;
  const Rational c = b[k].leading_coefficient() / a[k].leading_coefficient();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] * c == b[i])) return false;
  }
  return true;
}

inline bool equal_up_to_unit(const Polynomial& a, const Polynomial& b) {
  return equal_up_to_unit(std::span<const Polynomial>(&a, 1), std::span<const Polynomial>(&b, 1));
}

/// Leibniz permutation expansion; independent of the library's determinants.
inline Polynomial leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial acc(m.ring());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Polynomial term = Polynomial::constant(m.ring(), inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// Random sparse polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<unsigned> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
  Polynomial p(ring);
  const unsigned terms = count(rng);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(ring->size());
    const unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) {
      const std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    p += Polynomial::term(ring, m, coeff(rng));
  }
  return p;
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree,
                                      unsigned max_terms) {
  Polynomial p = random_poly(rng, ring, max_degree, max_terms);
  while (p.is_zero()) p = random_poly(rng, ring, max_degree, max_terms);
  return p;
}

/// Dense univariate polynomial over Q, lowest degree first. Test-local so the
/// preimage-count oracles do not go through the library's gcd.
struct Univariate {
  std::vector<Rational> c;

  static Univariate from(const Polynomial& p, std::size_t var) {
    Univariate u;
    for (const auto& [m, coeff] : p.terms()) {
      const std::size_t e = m[var];
      if (u.c.size() <= e) u.c.resize(e + 1);
      u.c[e] += coeff;
    }
    u.trim();
    return u;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Univariate mod(const Univariate& d) const {
    Univariate r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const Rational f = r.c.back() / d.c.back();
      const std::size_t shift = r.c.size() - d.c.size();
      for (std::size_t i = 0; i < d.c.size(); ++i) r.c[i + shift] -= f * d.c[i];
      r.trim();
    }
    return r;
  }
  Univariate derivative() const {
    Univariate d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<long>(i));
    d.trim();
    return d;
  }
};

inline Univariate univariate_gcd(Univariate a, Univariate b) {
  while (!b.is_zero()) {
    Univariate r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Number of distinct complex roots of the common factor of the inputs.
inline int distinct_common_roots(const std::vector<Univariate>& polys) {
  Univariate g = polys.front();
  for (std::size_t i = 1; i < polys.size(); ++i) g = univariate_gcd(g, polys[i]);
  if (g.degree() <= 0) return 0;
  const Univariate repeated = univariate_gcd(g, g.derivative());
  return g.degree() - std::max(repeated.degree(), 0);
}

}  // namespace birat::testing
