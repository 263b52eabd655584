#include "birat/movsurf.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "birat/errors.hpp"
#include "birat/verify.hpp"

namespace birat {

std::vector<Monomial> row_monomials_of_degree(unsigned m) { return monomials_of_degree(3, m); }

namespace {

// Scales a rational vector to coprime integers, keeping its sign.
RationalVector primitive_integer(const RationalVector& v) {
  Integer den = 1;
  Integer num = 0;
  for (const auto& c : v) {
    den = lcm(den, Integer(c.get_den()));
    num = gcd(num, Integer(c.get_num()));
  }
  RationalVector out(v.size());
  if (num == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rational(den, num);
  for (auto& c : out) c.canonicalize();
  return out;
}

}  // namespace

std::vector<MovingSurface> moving_surface_basis(const SurfaceParam& param, unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw DegreeError("moving surfaces need m >= 1 and n >= 1");
  const RingPtr& tx = rings::surface_tx();
  const RingPtr& t = rings::surface_t();

  std::vector<Monomial> unknowns;
  for (const auto& a : monomials_of_degree(3, m)) {
    for (const auto& g : monomials_of_degree(4, n)) {
      std::vector<std::uint32_t> e(a.exponents().begin(), a.exponents().end());
      e.insert(e.end(), g.exponents().begin(), g.exponents().end());
      unknowns.emplace_back(std::move(e));
    }
  }
  std::sort(unknowns.begin(), unknowns.end(), [](const Monomial& a, const Monomial& b) { return GrlexLess{}(b, a); });

  // Image of each unknown's monomial t^alpha X^gamma under X -> p.
  const Bindings bindings = param.coordinate_bindings();
  std::vector<Polynomial> images;
  images.reserve(unknowns.size());
  std::map<Monomial, std::size_t, GrlexLess> equation_index;
  for (const auto& u : unknowns) {
    images.push_back(substitute(Polynomial::term(tx, u), bindings, t));
    for (const auto& [mono, c] : images.back().terms()) equation_index.emplace(mono, 0);
  }
  std::size_t next = 0;
  for (auto it = equation_index.rbegin(); it != equation_index.rend(); ++it) it->second = next++;

  ScalarMatrix system(equation_index.size(), unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    for (const auto& [mono, c] : images[j].terms()) system(equation_index.at(mono), j) = c;
  }

  const auto kernel = nullspace_rational(system);
  std::vector<MovingSurface> out;
  if (kernel.empty()) return out;
  ScalarMatrix stacked(kernel.size(), unknowns.size());
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t c = 0; c < unknowns.size(); ++c) stacked(r, c) = kernel[r][c];
  }
  const ScalarMatrix canonical = rref(stacked);
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    RationalVector row(unknowns.size());
    for (std::size_t c = 0; c < unknowns.size(); ++c) row[c] = canonical(r, c);
    row = primitive_integer(row);
    Polynomial body(tx);
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      if (row[c] != 0) body += Polynomial::term(tx, unknowns[c], row[c]);
    }
    MovingSurface s{BiHomogeneousPoly(std::move(body), 3, m, n), false};
    s.follows_phi = follows_parameterization(s.body, param);
    if (!s.follows_phi) throw InvariantError("nullspace vector does not give a moving surface");
    out.push_back(std::move(s));
  }
  return out;
}

ElimMatrix assemble_candidate(const SurfaceParam& param, const std::vector<MovingSurface>& surfaces,
                              const std::vector<Monomial>& row_monomials, std::optional<std::size_t> marked_column) {
  const std::size_t d = row_monomials.size();
  if (surfaces.size() != d) {
    throw ShapeError(std::to_string(surfaces.size()) + " surfaces for " + std::to_string(d) + " row monomials");
  }
  PolyMatrix mat(rings::surface_x(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& s = surfaces[j];
    if (s.body.t_count() != 3 || !same_ring(s.body.base().ring(), rings::surface_tx())) {
      throw RingError("moving surfaces must live in t1, t2, t3, X1, ..., X4");
    }
    if (!follows_parameterization(s.body, param)) {
      throw NotFollowingError("surface " + std::to_string(j) + " does not follow the parameterization");
    }
    Polynomial covered(rings::surface_tx());
    for (std::size_t i = 0; i < d; ++i) {
      if (row_monomials[i].degree() != s.body.deg_t()) throw DegreeError("surface t-degree differs from the rows");
      Polynomial coeff = s.body.coefficient_of_t(row_monomials[i]);
      Monomial full(rings::surface_tx()->size());
      for (std::size_t k = 0; k < 3; ++k) full.set(k, row_monomials[i][k]);
      covered += coeff * Polynomial::term(rings::surface_tx(), full);
      mat.set(i, j, coeff.embed(rings::surface_x()));
    }
    if (!(covered == s.body.base())) throw ShapeError("surface has terms outside the row monomials");
  }
  ElimMatrix out(std::move(mat), row_monomials, MatrixKind::implicitization_candidate, marked_column);
  if (det_fraction_free(out.matrix()).is_zero()) {
    throw SingularMatrixError("the chosen moving surfaces are linearly dependent over K[X]");
  }
  return out;
}

CandidateSearch search_implicitization_candidate(const SurfaceParam& param, unsigned m_max,
                                                 std::optional<std::size_t> marked_column) {
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<int> dist(-30, 30);
  std::array<Rational, 4> point;
  for (auto& v : point) v = dist(rng);

  for (unsigned m = 1; m <= m_max; ++m) {
    const auto rows = row_monomials_of_degree(m);
    const std::size_t d = rows.size();
    const auto planes = moving_surface_basis(param, m, 1);
    const auto quadrics = moving_surface_basis(param, m, 2);

    std::vector<MovingSurface> chosen;
    ScalarMatrix values(d, 0);
    auto try_add = [&](const MovingSurface& s) {
      ScalarMatrix next(d, chosen.size() + 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < chosen.size(); ++j) next(i, j) = values(i, j);
        next(i, chosen.size()) = s.body.coefficient_of_t(rows[i]).embed(rings::surface_tx()).evaluate(
            std::array<Rational, 7>{0, 0, 0, point[0], point[1], point[2], point[3]});
      }
      if (rank(next) == chosen.size() + 1) {
        values = std::move(next);
        chosen.push_back(s);
      }
    };
    for (const auto& s : planes) {
      if (chosen.size() < d) try_add(s);
    }
    for (const auto& s : quadrics) {
      if (chosen.size() < d) try_add(s);
    }
    if (chosen.size() < d) continue;

    std::size_t marked = 0;
    for (std::size_t j = 1; j < d; ++j) {
      if (chosen[j].body.deg_x() > chosen[marked].body.deg_x()) marked = j;
    }
    if (marked_column) marked = *marked_column;
    try {
      ElimMatrix mat = assemble_candidate(param, chosen, rows, marked);
      return CandidateSearch{std::move(mat), std::move(chosen), planes.size(), quadrics.size()};
    } catch (const SingularMatrixError&) {
      continue;
    }
  }
  throw SingularMatrixError("no nonsingular moving-surface matrix with m <= " + std::to_string(m_max) +
                            "; the image may be a curve or a point");
}

}  // namespace birat
