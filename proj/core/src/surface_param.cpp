#include <algorithm>

#include "birat/errors.hpp"
#include "birat/surface.hpp"

namespace birat {

SurfaceParam::SurfaceParam(std::array<Polynomial, 4> p, bool affine_convention)
    : p_(std::move(p)), degree_(-1), affine_(affine_convention) {
  const RingPtr& ring = rings::surface_t();
  for (auto& pi : p_) pi = pi.embed(ring);
  const Polynomial g = gcd(std::span<const Polynomial>(p_));
  if (!g.is_unit()) {
    for (auto& pi : p_) pi = exact_divide(pi, g);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& pi = p_[i];
    if (pi.is_zero()) continue;
    if (!pi.is_homogeneous()) {
      throw DegreeError("p" + std::to_string(i + 1) + " = " + to_string(pi) + " is not homogeneous");
    }
    if (degree_ < 0) {
      degree_ = pi.total_degree();
    } else if (pi.total_degree() != degree_) {
      throw DegreeError("p" + std::to_string(i + 1) + " has degree " + std::to_string(pi.total_degree()) +
                        ", expected " + std::to_string(degree_));
    }
  }
  if (degree_ < 1) throw DegreeError("the parameterization is constant");
}

SurfaceParam SurfaceParam::from_affine(const std::array<Polynomial, 3>& num, const std::array<Polynomial, 3>& den) {
  const RingPtr& ring = rings::surface_t();
  std::array<Polynomial, 3> n{num[0].embed(ring), num[1].embed(ring), num[2].embed(ring)};
  std::array<Polynomial, 3> d{den[0].embed(ring), den[1].embed(ring), den[2].embed(ring)};
  const auto t3 = *ring->index_of("t3");
  for (std::size_t i = 0; i < 3; ++i) {
    if (n[i].involves(t3) || d[i].involves(t3)) throw RingError("affine input must not use t3");
    if (d[i].is_zero()) throw DomainError("zero denominator for X" + std::to_string(i + 1));
  }
  Polynomial common = d[0];
  for (std::size_t i = 1; i < 3; ++i) {
    common = exact_divide(common * d[i], gcd(common, d[i]));
  }
  // A shared denominator is kept exactly as given rather than normalized.
  if (d[0] == d[1] && d[1] == d[2]) common = d[0];

  std::array<Polynomial, 4> affine{exact_divide(common, d[0]) * n[0], exact_divide(common, d[1]) * n[1],
                                   exact_divide(common, d[2]) * n[2], common};
  int degree = 0;
  for (const auto& a : affine) degree = std::max(degree, a.total_degree());
  std::array<Polynomial, 4> homogeneous{Polynomial(ring), Polynomial(ring), Polynomial(ring), Polynomial(ring)};
  for (std::size_t i = 0; i < 4; ++i) homogeneous[i] = homogenize(affine[i], "t3", degree).embed(ring);
  return SurfaceParam(std::move(homogeneous), true);
}

Bindings SurfaceParam::coordinate_bindings() const {
  return {{"X1", p_[0]}, {"X2", p_[1]}, {"X3", p_[2]}, {"X4", p_[3]}};
}

}  // namespace birat
