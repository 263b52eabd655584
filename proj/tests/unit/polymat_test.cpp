#include <doctest.h>

#include "birat/curve.hpp"
#include "birat/errors.hpp"
#include "birat/movsurf.hpp"
#include "birat/polymat.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birat;
using birat::testing::matrix;
using birat::testing::poly;

namespace {

PolyMatrix identity(const RingPtr& r, std::size_t n) {
  PolyMatrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(r, 1));
  return m;
}

ScalarMatrix scalar(std::initializer_list<std::initializer_list<int>> rows) {
  ScalarMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("polymat") {
  TEST_CASE("determinants of known matrices") {
    const RingPtr& xy = rings::curve_xy();
    CHECK(det_fraction_free(identity(xy, 4)) == Polynomial::constant(xy, 1));
    CHECK(det_fraction_free(fixtures::circle_sylvester_expected()) == poly("4*(x^2 + y^2 - 1)", xy));
    CHECK(det_cofactor(fixtures::circle_sylvester_expected()) == poly("4*(x^2 + y^2 - 1)", xy));
    CHECK_THROWS_AS(det_fraction_free(PolyMatrix(xy, 2, 3)), ShapeError);
    CHECK(det_fraction_free(PolyMatrix(xy, 0, 0)) == Polynomial::constant(xy, 1));

    const PolyMatrix cubic = fixtures::cubic_display().transpose();
    const Polynomial det = det_fraction_free(cubic);
    CHECK(det.total_degree() == 3);
    CHECK(det == birat::testing::leibniz_det(cubic));
  }

  TEST_CASE("zero pivot column gives zero") {
    const RingPtr& xy = rings::curve_xy();
    CHECK(det_fraction_free(matrix({{"0", "x", "y"}, {"0", "1", "x"}, {"0", "y", "1"}}, xy)).is_zero());
    CHECK(det_fraction_free(matrix({{"x", "x*y"}, {"1", "y"}}, xy)).is_zero());
  }

  TEST_CASE("signed maximal minors of the circle matrix") {
    const PolyMatrix s = fixtures::circle_sylvester_expected();
    const std::size_t last = 3;
    const PolyMatrix m = s.submatrix({}, std::span<const std::size_t>(&last, 1));
    const SignedMinorVector minors = signed_maximal_minors(m);
    CHECK(minors.size() == 4);
    CHECK(birat::testing::equal_up_to_unit(minors.values(), fixtures::circle_minors_expected()));
    for (const auto& v : m.transpose().apply(minors.values())) CHECK(v.is_zero());
    CHECK_THROWS_AS(signed_maximal_minors(s), ShapeError);
  }

  TEST_CASE("duplicated rows") {
    const RingPtr& xy = rings::curve_xy();
    const PolyMatrix m = matrix({{"x", "y + 1"}, {"x*y", "2"}, {"x", "y + 1"}}, xy);
    const SignedMinorVector minors = signed_maximal_minors(m);
    CHECK(minors[1].is_zero());
    CHECK(minors[0] == -minors[2]);
    CHECK(det_fraction_free(matrix({{"x", "y", "1"}, {"x", "y", "1"}, {"2", "x", "y"}}, xy)).is_zero());
  }

  TEST_CASE("minor") {
    const PolyMatrix m = fixtures::cubic_display();
    const std::size_t r0 = 0, c0 = 0;
    const Polynomial got = minor(m, std::span<const std::size_t>(&r0, 1), std::span<const std::size_t>(&c0, 1));
    CHECK(got == birat::testing::leibniz_det(
                     matrix({{"X3 - 2*X2", "-X2 - 2*X4"}, {"X2", "X3"}}, rings::surface_x())));
    const PolyMatrix one = matrix({{"x*y - 3"}}, rings::curve_xy());
    CHECK(minor(one, {}, {}) == poly("x*y - 3", rings::curve_xy()));
    CHECK_THROWS_AS(minor(m, std::span<const std::size_t>(&r0, 1), {}), ShapeError);

    // Quartic: dropping the last row and the last column of the Dixon display.
    const std::size_t last = 5;
    const PolyMatrix d = fixtures::quartic_dixon_display();
    const Polynomial num = minor(d, std::span<const std::size_t>(&last, 1), std::span<const std::size_t>(&last, 1));
    CHECK(!num.is_zero());
  }

  TEST_CASE("matrix algebra") {
    const RingPtr& xy = rings::curve_xy();
    const PolyMatrix a = matrix({{"x", "1"}, {"0", "y"}}, xy);
    const PolyMatrix b = matrix({{"1", "0"}, {"x", "1"}}, xy);
    CHECK(a * b == matrix({{"2*x", "1"}, {"x*y", "y"}}, xy));
    CHECK(det_fraction_free(a * b) == det_fraction_free(a) * det_fraction_free(b));
    CHECK(a.transpose().transpose() == a);
    CHECK_THROWS_AS(PolyMatrix(xy, 2, 2, {poly("x", xy)}), ShapeError);
    CHECK_THROWS_AS(a.at(2, 0), ShapeError);
    CHECK(!to_string(a).empty());
  }

  TEST_CASE("rational nullspace") {
    const auto basis = nullspace_rational(scalar({{1, 0, -1}, {0, 1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RationalVector{1, 1, 1});
    CHECK(nullspace_rational(ScalarMatrix(3, 3)).size() == 3);
    CHECK(nullspace_rational(scalar({{1, 2}, {3, 4}})).empty());
    CHECK(rank(scalar({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);

    std::vector<std::size_t> pivots;
    const ScalarMatrix r = rref(scalar({{0, 2, 4}, {1, 1, 1}}), &pivots);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(r(0, 0) == 1);
    CHECK(r(0, 2) == -1);
    CHECK(r(1, 2) == 2);
  }

  TEST_CASE("nullspace of the cubic's planes system contains the displayed planes") {
    const auto basis = moving_surface_basis(fixtures::cubic(), 1, 1);
    CHECK(basis.size() >= 3);
    for (const auto& ms : basis) CHECK(ms.follows_phi);
  }
}
