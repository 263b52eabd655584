#include <doctest.h>

#include <random>

#include "birat/bihomogeneous.hpp"
#include "birat/curve.hpp"
#include "birat/errors.hpp"
#include "birat/poly_io.hpp"
#include "birat/polymat.hpp"
#include "support.hpp"

using namespace birat;
using birat::testing::random_nonzero_poly;
using birat::testing::random_poly;

namespace {

constexpr int kCases = 100;

const RingPtr& xyz() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}

PolyMatrix random_matrix(std::mt19937_64& rng, const RingPtr& r, std::size_t rows, std::size_t cols,
                         unsigned degree, unsigned terms) {
  PolyMatrix m(r, rows, cols);
  std::bernoulli_distribution zero(0.2);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!zero(rng)) m.set(i, j, random_poly(rng, r, degree, terms));
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("kernel identity of signed maximal minors") {
    std::mt19937_64 rng(1);
    const RingPtr& r = rings::curve_xy();
    for (int k = 0; k < kCases; ++k) {
      const std::size_t d = 2 + static_cast<std::size_t>(k % 5);
      const PolyMatrix m = random_matrix(rng, r, d, d - 1, 2, 3);
      const SignedMinorVector minors = signed_maximal_minors(m);
      for (const auto& v : m.transpose().apply(minors.values())) CHECK(v.is_zero());
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(2);
    const RingPtr& r = xyz();
    for (int k = 0; k < kCases; ++k) {
      const Polynomial a = random_poly(rng, r, 4, 5);
      const Polynomial b = random_poly(rng, r, 4, 5);
      const Polynomial c = random_poly(rng, r, 4, 5);
      const Bindings map{{"x", random_poly(rng, r, 2, 3)}, {"y", random_poly(rng, r, 2, 3)}};
      auto s = [&](const Polynomial& p) { return substitute(p, map, r); };
      CHECK(s(a * b + c) == s(a) * s(b) + s(c));
    }
  }

  TEST_CASE("exact division round trip") {
    std::mt19937_64 rng(3);
    const RingPtr& r = xyz();
    for (int k = 0; k < kCases; ++k) {
      const Polynomial a = random_nonzero_poly(rng, r, 4, 5);
      const Polynomial b = random_nonzero_poly(rng, r, 4, 5);
      CHECK(exact_divide(a * b, b) == a);
    }
  }

  TEST_CASE("gcd divides with coprime cofactors") {
    std::mt19937_64 rng(4);
    const RingPtr& r = xyz();
    for (int k = 0; k < kCases; ++k) {
      const Polynomial common = random_nonzero_poly(rng, r, 2, 3);
      const Polynomial a = common * random_nonzero_poly(rng, r, 3, 3);
      const Polynomial b = common * random_nonzero_poly(rng, r, 3, 3);
      const Polynomial g = gcd(a, b);
      const Polynomial ca = exact_divide(a, g);
      const Polynomial cb = exact_divide(b, g);
      CHECK(gcd(ca, cb).is_unit());
      CHECK(exact_divide(g, common.primitive()).total_degree() >= 0);
      CHECK(g.leading_coefficient() > 0);
    }
  }

  TEST_CASE("determinant with a duplicated row vanishes") {
    std::mt19937_64 rng(5);
    const RingPtr& r = rings::curve_xy();
    for (int k = 0; k < kCases; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
      PolyMatrix m = random_matrix(rng, r, n, n, 2, 3);
      const std::size_t src = static_cast<std::size_t>(k) % n;
      const std::size_t dst = (src + 1) % n;
      for (std::size_t j = 0; j < n; ++j) m.set(dst, j, m(src, j));
      CHECK(det_fraction_free(m).is_zero());
    }
  }

  TEST_CASE("determinant is linear in one row") {
    std::mt19937_64 rng(6);
    const RingPtr& r = rings::curve_xy();
    for (int k = 0; k < kCases; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
      const PolyMatrix m = random_matrix(rng, r, n, n, 2, 3);
      const Polynomial c = random_nonzero_poly(rng, r, 2, 2);
      PolyMatrix scaled = m;
      const std::size_t row = static_cast<std::size_t>(k) % n;
      for (std::size_t j = 0; j < n; ++j) scaled.set(row, j, m(row, j) * c);
      CHECK(det_fraction_free(scaled) == c * det_fraction_free(m));
    }
  }

  TEST_CASE("fraction-free determinant matches the reference expansions") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < kCases; ++k) {
      const std::size_t n = 1 + static_cast<std::size_t>(k % 8);
      if (n <= 5) {
        const PolyMatrix m = random_matrix(rng, rings::curve_xy(), n, n, 2, 2);
        CHECK(det_fraction_free(m) == birat::testing::leibniz_det(m));
      } else {
        const PolyMatrix m = random_matrix(rng, rings::curve_xy(), n, n, 0, 1);
        CHECK(det_fraction_free(m) == det_cofactor(m));
      }
    }
  }

  TEST_CASE("printing and parsing round trip") {
    std::mt19937_64 rng(8);
    const RingPtr& r = rings::surface_tx();
    std::uniform_int_distribution<int> den(1, 9);
    for (int k = 0; k < kCases; ++k) {
      const Polynomial p = random_poly(rng, r, 5, 6) * Rational(1, den(rng));
      CHECK(parse_polynomial(to_string(p), r) == p);
    }
  }

  TEST_CASE("bihomogeneous degrees survive ring operations") {
    std::mt19937_64 rng(9);
    const RingPtr& tx = rings::surface_tx();
    std::uniform_int_distribution<unsigned> deg(0, 2);
    auto random_bihomogeneous = [&](unsigned dt, unsigned dx) {
      std::uniform_int_distribution<std::size_t> tv(0, 2), xv(3, 6);
      Polynomial p(tx);
      for (int term = 0; term < 3; ++term) {
        Monomial m(tx->size());
        for (unsigned e = 0; e < dt; ++e) {
          const std::size_t v = tv(rng);
          m.set(v, m[v] + 1);
        }
        for (unsigned e = 0; e < dx; ++e) {
          const std::size_t v = xv(rng);
          m.set(v, m[v] + 1);
        }
        p += Polynomial::term(tx, m, term + 1);
      }
      return BiHomogeneousPoly(p, 3, dt, dx);
    };
    for (int k = 0; k < kCases; ++k) {
      const unsigned dt = deg(rng), dx = deg(rng);
      const BiHomogeneousPoly a = random_bihomogeneous(dt, dx);
      const BiHomogeneousPoly b = random_bihomogeneous(dt, dx);
      const BiHomogeneousPoly sum = a + b;
      CHECK((sum.is_zero() || sum.base().is_homogeneous()));
      const BiHomogeneousPoly prod = a * b;
      CHECK(prod.deg_t() == 2 * dt);
      CHECK(prod.deg_x() == 2 * dx);
      CHECK(BiHomogeneousPoly(prod.base(), 3, 2 * dt, 2 * dx) == prod);
    }
  }

  TEST_CASE("curve identities on random parameterizations") {
    std::mt19937_64 rng(10);
    const RingPtr& t = rings::curve_t();
    int checked = 0;
    while (checked < kCases) {
      const Polynomial p1 = random_poly(rng, t, 3, 3), q1 = random_nonzero_poly(rng, t, 3, 3);
      const Polynomial p2 = random_poly(rng, t, 3, 3), q2 = random_nonzero_poly(rng, t, 3, 3);
      try {
        const PlaneCurveParam c(p1, q1, p2, q2);
        const CurveInversionResult r = curve_properness(c);
        CHECK(r.determinant_identity_holds);
        if (!r.determinant.is_zero()) CHECK(exact_divide(r.determinant, r.gcd_of_minors).total_degree() >= 0);
        if (r.proper) CHECK(curve_inverse_check(c, r));
        ++checked;
      } catch (const LineCaseError&) {
      }
    }
  }
}
