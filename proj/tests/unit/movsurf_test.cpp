#include <doctest.h>

#include "birat/errors.hpp"
#include "birat/movsurf.hpp"
#include "birat/verify.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birat;
using birat::testing::poly;

namespace {

// True when every target lies in the rational span of `basis`.
bool spans(const std::vector<MovingSurface>& basis, const std::vector<Polynomial>& targets) {
  std::vector<Monomial> support;
  auto collect = [&](const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
      if (std::find(support.begin(), support.end(), m) == support.end()) support.push_back(m);
    }
  };
  for (const auto& b : basis) collect(b.body.base());
  for (const auto& t : targets) collect(t);
  auto column_matrix = [&](const std::vector<Polynomial>& ps) {
    ScalarMatrix m(support.size(), ps.size());
    for (std::size_t j = 0; j < ps.size(); ++j) {
      for (std::size_t i = 0; i < support.size(); ++i) m(i, j) = ps[j].coefficient(support[i]);
    }
    return m;
  };
  std::vector<Polynomial> bodies;
  for (const auto& b : basis) bodies.push_back(b.body.base());
  const std::size_t r = rank(column_matrix(bodies));
  std::vector<Polynomial> all = bodies;
  all.insert(all.end(), targets.begin(), targets.end());
  return rank(column_matrix(all)) == r;
}

std::vector<Polynomial> selected_bodies(const std::vector<MovingSurface>& surfaces) {
  std::vector<Polynomial> out;
  for (const auto& s : surfaces) out.push_back(s.body.base());
  return out;
}

}  // namespace

TEST_SUITE("movsurf") {
  TEST_CASE("cubic planes") {
    const auto basis = moving_surface_basis(fixtures::cubic(), 1, 1);
    CHECK(basis.size() == 3);
    CHECK(spans(basis, fixtures::cubic_planes()));
    for (const auto& ms : basis) {
      CHECK(ms.follows_phi);
      CHECK(follows_parameterization(ms.body, fixtures::cubic()));
      CHECK(ms.body.deg_t() == 1);
      CHECK(ms.body.deg_x() == 1);
    }
  }

  TEST_CASE("toric planes and quadrics") {
    const auto planes = moving_surface_basis(fixtures::toric(), 1, 1);
    const auto quadrics = moving_surface_basis(fixtures::toric(), 1, 2);
    CHECK(planes.size() == 2);
    CHECK(quadrics.size() >= 1);
    const auto surfaces = fixtures::toric_surfaces();
    CHECK(spans(planes, {surfaces[0], surfaces[1]}));
    CHECK(spans(quadrics, {surfaces[2]}));
    CHECK(quadrics.size() >= planes.size());
  }

  TEST_CASE("Koszul relations at bidegree (deg p; 1)") {
    const auto basis = moving_surface_basis(fixtures::toric(), 3, 1);
    CHECK(basis.size() >= 3);
  }

  TEST_CASE("basis is deterministic") {
    const auto a = moving_surface_basis(fixtures::toric(), 1, 2);
    const auto b = moving_surface_basis(fixtures::toric(), 1, 2);
    CHECK(selected_bodies(a) == selected_bodies(b));
  }

  TEST_CASE("assembling the displayed matrices") {
    std::vector<MovingSurface> planes;
    for (const auto& p : fixtures::cubic_planes()) planes.push_back({BiHomogeneousPoly::infer(p, 3), true});
    const ElimMatrix cubic = assemble_candidate(fixtures::cubic(), planes, row_monomials_of_degree(1));
    CHECK(cubic.matrix() == birat::testing::matrix({{"X1", "X2 + X4", "X3 - X2"},
                                                    {"X2", "2*X2 - X3", "-X1 + 2*X4"},
                                                    {"X3", "X2 + 2*X4", "X1 - X2"}},
                                                   rings::surface_x()));
    CHECK(verify_implicit(det_fraction_free(cubic.matrix()), fixtures::cubic()));

    std::vector<MovingSurface> toric;
    for (const auto& p : fixtures::toric_surfaces()) toric.push_back({BiHomogeneousPoly::infer(p, 3), true});
    const ElimMatrix t = assemble_candidate(fixtures::toric(), toric, row_monomials_of_degree(1), 2);
    CHECK(t.matrix() == fixtures::toric_display().transpose());
    CHECK(t.marked_column() == std::optional<std::size_t>(2));
  }

  TEST_CASE("assembly errors") {
    std::vector<MovingSurface> planes;
    const auto p = fixtures::cubic_planes();
    for (const auto& q : {p[0], p[1], p[0] + p[1]}) planes.push_back({BiHomogeneousPoly::infer(q, 3), true});
    CHECK_THROWS_AS(assemble_candidate(fixtures::cubic(), planes, row_monomials_of_degree(1)), SingularMatrixError);

    std::vector<MovingSurface> wrong = {{BiHomogeneousPoly::infer(poly("t1*X1", rings::surface_tx()), 3), false}};
    wrong.push_back({BiHomogeneousPoly::infer(p[1], 3), true});
    wrong.push_back({BiHomogeneousPoly::infer(p[2], 3), true});
    CHECK_THROWS_AS(assemble_candidate(fixtures::cubic(), wrong, row_monomials_of_degree(1)), NotFollowingError);

    planes.pop_back();
    CHECK_THROWS_AS(assemble_candidate(fixtures::cubic(), planes, row_monomials_of_degree(1)), ShapeError);
  }

  TEST_CASE("candidate search") {
    const CandidateSearch cubic = search_implicitization_candidate(fixtures::cubic());
    CHECK(cubic.matrix.m() == 1);
    CHECK(cubic.planes_available == 3);
    CHECK(cubic.matrix.marked_column() == std::optional<std::size_t>(0));
    CHECK(verify_implicit(det_fraction_free(cubic.matrix.matrix()), fixtures::cubic()));

    const CandidateSearch toric = search_implicitization_candidate(fixtures::toric());
    CHECK(toric.planes_available == 2);
    CHECK(toric.quadrics_available >= 1);
    CHECK(toric.matrix.marked_column() == std::optional<std::size_t>(2));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(follows_parameterization(toric.matrix.column_polynomial(j), fixtures::toric()));
    }

    const CandidateSearch moved = search_implicitization_candidate(fixtures::toric(), 3, 0);
    CHECK(moved.matrix.marked_column() == std::optional<std::size_t>(0));
  }

  TEST_CASE("row monomials") {
    const auto rows = row_monomials_of_degree(2);
    CHECK(rows.size() == 6);
    CHECK(rows.front() == Monomial({2, 0, 0}));
    CHECK(rows.back() == Monomial({0, 0, 2}));
  }
}
