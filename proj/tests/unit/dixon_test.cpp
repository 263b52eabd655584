#include <doctest.h>

#include "birat/dixon.hpp"
#include "birat/errors.hpp"
#include "birat/verify.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birat;
using birat::testing::poly;

namespace {

Polynomial cayley_determinant(const DixonSystem& sys) {
  const RingPtr& r = dixon_ring();
  const Polynomial a = Polynomial::variable(r, "a");
  const Polynomial b = Polynomial::variable(r, "b");
  PolyMatrix m(r, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const Polynomial& f = sys.f(i);
    const Polynomial f_a = substitute(f, {{"t1", a}}, r);
    m.set(0, i, f);
    m.set(1, i, f_a);
    m.set(2, i, substitute(f_a, {{"t2", b}}, r));
  }
  return birat::testing::leibniz_det(m);
}

}  // namespace

TEST_SUITE("dixon") {
  TEST_CASE("system validation") {
    const RingPtr& r = dixon_ring();
    const DixonSystem sys = fixtures::quartic_system();
    CHECK(sys.degree() == 2);
    CHECK(sys.f(0) == poly("(t1^2 + t2^2 + 1)*X1 - t1^2", r));
    CHECK_THROWS_AS(DixonSystem({poly("X1*X2 - t1", r), poly("X2 - t2", r), poly("X3 - t1*t2", r)}),
                    DixonInapplicableError);
    CHECK_THROWS_AS(DixonSystem({poly("(t1 + 1)*X1 - t1", r), poly("X2 - t2", r), poly("X3 - t1*t2", r)}),
                    DixonInapplicableError);
    CHECK_THROWS_AS(DixonSystem({poly("X1 - 2", r), poly("X2 - 1", r), poly("X3", r)}), DixonInapplicableError);
  }

  TEST_CASE("Cayley quotient") {
    const DixonSystem sys = fixtures::quartic_system();
    const RingPtr& r = dixon_ring();
    const Polynomial q = cayley_quotient(sys);
    CHECK(q * poly("(t1 - a)*(t2 - b)", r) == cayley_determinant(sys));
    CHECK(q.degree_in_range(0, 2) <= 2);
    CHECK(q.degree_in_range(2, 4) <= 2);
  }

  TEST_CASE("degenerate direction") {
    const RingPtr& r = dixon_ring();
    const DixonSystem flat = DixonSystem::from_affine(poly("t1^2 + 1", r),
                                                      {poly("t1", r), poly("t1^2", r), poly("1", r)});
    CHECK_THROWS_AS(cayley_quotient(flat), DixonInapplicableError);
  }

  TEST_CASE("swapping the two variable pairs") {
    const DixonSystem sys = fixtures::quartic_system();
    const RingPtr& r = dixon_ring();
    const Polynomial q = cayley_quotient(sys);
    const Polynomial swapped = substitute(q,
                                          {{"t1", Polynomial::variable(r, "a")},
                                           {"t2", Polynomial::variable(r, "b")},
                                           {"a", Polynomial::variable(r, "t1")},
                                           {"b", Polynomial::variable(r, "t2")}},
                                          r);
    CHECK(!swapped.is_zero());
    CHECK(swapped.degree_in_range(0, 2) == q.degree_in_range(2, 4));
  }

  TEST_CASE("the quartic's matrix") {
    const DixonMatrix d = dixon_matrix(fixtures::quartic_system());
    CHECK(d.matrix.rows() == 6);
    CHECK(d.matrix.cols() == 6);
    CHECK(d.matrix == fixtures::quartic_dixon_display());
    CHECK(d.column_monomials == affine_monomials(2));
    CHECK(d.row_labels.front() == "F1");
    CHECK(d.unused_quotient_rows == 1);
    CHECK(d.candidate.kind() == MatrixKind::implicitization_candidate);
    CHECK(d.candidate.marked_column() == std::optional<std::size_t>(5));
  }

  TEST_CASE("the Dixon determinant vanishes on the surface") {
    const DixonMatrix d = dixon_matrix(fixtures::quartic_system());
    const Polynomial det = det_fraction_free(d.candidate.matrix());
    CHECK(verify_implicit(det, fixtures::quartic()));
  }

  TEST_CASE("affine monomials") {
    const auto m = affine_monomials(2);
    REQUIRE(m.size() == 6);
    CHECK(m[0] == Monomial({0, 0}));
    CHECK(m[1] == Monomial({1, 0}));
    CHECK(m[2] == Monomial({0, 1}));
    CHECK(m[4] == Monomial({1, 1}));
  }

  TEST_CASE("projective input goes through its affine chart") {
    const DixonSystem sys = DixonSystem::from_param(fixtures::quartic());
    CHECK(dixon_matrix(sys).matrix == fixtures::quartic_dixon_display());
  }
}
