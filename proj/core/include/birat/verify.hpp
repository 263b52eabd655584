#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "birat/bihomogeneous.hpp"
#include "birat/surface.hpp"

namespace birat {

/// True iff M vanishes identically after X_i -> p_i. M lives in
/// rings::surface_tx() (or a ring whose variables it shares by name).
bool follows_parameterization(const BiHomogeneousPoly& m, const SurfaceParam& param);
bool follows_parameterization(const Polynomial& m, const SurfaceParam& param);

/// Exact check of psi(phi(t)) = (t1:t2:t3): the three cross identities
/// psi_i(p) t_j - psi_j(p) t_i = 0 and at least one psi_i(p) != 0. A random
/// evaluation runs first and can only reject; `seed` drives it.
bool verify_inverse(const SurfaceParam& param, const InverseMap& psi, std::uint64_t seed = 0);

/// F(p1, p2, p3, p4) == 0. Throws DomainError for F = 0.
bool verify_implicit(const Polynomial& f, const SurfaceParam& param);

/// True iff num1/den1 and num2/den2 agree on the image surface, i.e.
/// num1*den2 - num2*den1 vanishes under X -> p. Inputs in X1..X3 are read
/// affinely (X4 = 1) and homogenized first.
bool equal_on_surface(const Polynomial& num1, const Polynomial& den1, const Polynomial& num2,
                      const Polynomial& den2, const SurfaceParam& param);

/// Image variable -> fraction (numerator, denominator).
using FractionBindings = std::map<std::string, std::pair<Polynomial, Polynomial>, std::less<>>;

/// Substitutes fractions into several polynomials at once and clears
/// denominators with the same factor for all of them: a variable v occurring
/// with maximal degree D_v across `polys` contributes den_v^D_v. Variables
/// without a binding must exist in `target`.
std::vector<Polynomial> substitute_fractions(std::span<const Polynomial> polys, const FractionBindings& bindings,
                                             const RingPtr& target);

}  // namespace birat
