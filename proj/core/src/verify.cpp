#include "birat/verify.hpp"

#include <algorithm>
#include <random>

#include "birat/errors.hpp"

namespace birat {

bool follows_parameterization(const Polynomial& m, const SurfaceParam& param) {
  return substitute(m, param.coordinate_bindings(), rings::surface_t()).is_zero();
}

bool follows_parameterization(const BiHomogeneousPoly& m, const SurfaceParam& param) {
  return follows_parameterization(m.base(), param);
}

namespace {

bool rejected_at_random_point(const SurfaceParam& param, const InverseMap& psi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  std::array<Rational, 3> t{Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng))};
  if (t[2] == 0) t[2] = 1;
  std::array<Rational, 4> x;
  for (std::size_t i = 0; i < 4; ++i) x[i] = param.p(i).evaluate(t);
  const std::array<Rational, 3> v{psi.psi1.evaluate(x), psi.psi2.evaluate(x), psi.psi3.evaluate(x)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (v[i] * t[j] != v[j] * t[i]) return true;
    }
  }
  return false;
}

}  // namespace

bool verify_inverse(const SurfaceParam& param, const InverseMap& psi, std::uint64_t seed) {
  if (rejected_at_random_point(param, psi, seed)) return false;
  const RingPtr& ring = rings::surface_t();
  const Bindings b = param.coordinate_bindings();
  const std::array<Polynomial, 3> q{substitute(psi.psi1.embed(rings::surface_x()), b, ring),
                                    substitute(psi.psi2.embed(rings::surface_x()), b, ring),
                                    substitute(psi.psi3.embed(rings::surface_x()), b, ring)};
  if (std::all_of(q.begin(), q.end(), [](const Polynomial& p) { return p.is_zero(); })) return false;
  const std::array<Polynomial, 3> t{Polynomial::variable(ring, "t1"), Polynomial::variable(ring, "t2"),
                                    Polynomial::variable(ring, "t3")};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(q[i] * t[j] - q[j] * t[i]).is_zero()) return false;
    }
  }
  return true;
}

bool verify_implicit(const Polynomial& f, const SurfaceParam& param) {
  if (f.is_zero()) throw DomainError("the zero polynomial is not an implicit equation");
  return substitute(f.embed(rings::surface_x()), param.coordinate_bindings(), rings::surface_t()).is_zero();
}

bool equal_on_surface(const Polynomial& num1, const Polynomial& den1, const Polynomial& num2,
                      const Polynomial& den2, const SurfaceParam& param) {
  const RingPtr& ring = rings::surface_x();
  auto homogeneous_pair = [&](const Polynomial& n, const Polynomial& d) {
    const Polynomial a = n.embed(ring);
    const Polynomial b = d.embed(ring);
    const int degree = std::max(a.total_degree(), b.total_degree());
    return std::pair{homogenize(a, "X4", std::max(degree, 0)), homogenize(b, "X4", std::max(degree, 0))};
  };
  const auto [n1, d1] = homogeneous_pair(num1, den1);
  const auto [n2, d2] = homogeneous_pair(num2, den2);
  const Bindings b = param.coordinate_bindings();
  const RingPtr& t = rings::surface_t();
  if (substitute(d1, b, t).is_zero() || substitute(d2, b, t).is_zero()) return false;
  return substitute(n1 * d2 - n2 * d1, b, t).is_zero();
}

std::vector<Polynomial> substitute_fractions(std::span<const Polynomial> polys, const FractionBindings& bindings,
                                             const RingPtr& target) {
  std::vector<Polynomial> out;
  if (polys.empty()) return out;
  const RingPtr& source = polys.front().ring();
  for (const auto& p : polys) {
    if (!same_ring(p.ring(), source)) throw RingError("substitute_fractions needs polynomials in one ring");
  }
  const std::size_t n = source->size();
  std::vector<int> max_degree(n, 0);
  for (const auto& p : polys) {
    for (std::size_t v = 0; v < n; ++v) max_degree[v] = std::max(max_degree[v], p.degree_in(v));
  }

  // Each bound variable v becomes num_v * den_v^(D_v - 1) / den_v^D_v; scaling
  // the result by prod den_v^D_v leaves num_v^e * den_v^(D_v - e) per term.
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& name = source->variable(v);
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      images.push_back(target->contains(name) ? Polynomial::variable(target, name) : Polynomial(target));
    } else {
      images.push_back(it->second.first.embed(target));
    }
  }
  for (const auto& p : polys) {
    Polynomial acc(target);
    for (const auto& [m, c] : p.terms()) {
      Polynomial term = Polynomial::constant(target, c);
      for (std::size_t v = 0; v < n; ++v) {
        const auto& name = source->variable(v);
        auto it = bindings.find(name);
        if (it == bindings.end()) {
          if (m[v] == 0) continue;
          if (!target->contains(name)) {
            throw RingError("variable '" + name + "' has no binding and is absent from " + describe(*target));
          }
          term *= images[v].pow(m[v]);
          continue;
        }
        const auto d = static_cast<unsigned>(max_degree[v]);
        if (d == 0) continue;
        term *= images[v].pow(m[v]) * it->second.second.embed(target).pow(d - m[v]);
      }
      acc += term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace birat
