#include "birat/bihomogeneous.hpp"

#include "birat/errors.hpp"

namespace birat {

BiHomogeneousPoly::BiHomogeneousPoly(Polynomial base, std::size_t t_count, unsigned deg_t, unsigned deg_x)
    : base_(std::move(base)), t_count_(t_count), deg_t_(deg_t), deg_x_(deg_x) {
  const std::size_t n = base_.ring()->size();
  if (t_count_ > n) throw RingError("t-variable count exceeds the ring size");
  for (const auto& [m, c] : base_.terms()) {
    if (m.degree_in(0, t_count_) != deg_t_ || m.degree_in(t_count_, n) != deg_x_) {
      throw DegreeError("term of " + to_string(base_) + " is not of bidegree (" + std::to_string(deg_t_) +
                        ";" + std::to_string(deg_x_) + ")");
    }
  }
}

BiHomogeneousPoly BiHomogeneousPoly::infer(Polynomial base, std::size_t t_count) {
  if (base.is_zero()) throw DegreeError("the zero polynomial has no bidegree");
  const Monomial& lead = base.leading_monomial();
  const unsigned dt = lead.degree_in(0, t_count);
  const unsigned dx = lead.degree_in(t_count, lead.size());
  return BiHomogeneousPoly(std::move(base), t_count, dt, dx);
}

Polynomial BiHomogeneousPoly::coefficient_of_t(const Monomial& key) const {
  if (key.size() != t_count_) throw RingError("t-monomial has the wrong number of variables");
  Monomial full(base_.ring()->size());
  for (std::size_t i = 0; i < t_count_; ++i) full.set(i, key[i]);
  return base_.coefficient_of(0, t_count_, full);
}

void BiHomogeneousPoly::require_compatible(const BiHomogeneousPoly& other, bool same_bidegree) const {
  if (!same_ring(base_.ring(), other.base_.ring()) || t_count_ != other.t_count_) {
    throw RingError("bihomogeneous operands live in different rings");
  }
  if (same_bidegree && (deg_t_ != other.deg_t_ || deg_x_ != other.deg_x_)) {
    throw DegreeError("bihomogeneous operands have different bidegrees");
  }
}

BiHomogeneousPoly& BiHomogeneousPoly::operator+=(const BiHomogeneousPoly& other) {
  require_compatible(other, true);
  base_ += other.base_;
  return *this;
}

BiHomogeneousPoly& BiHomogeneousPoly::operator-=(const BiHomogeneousPoly& other) {
  require_compatible(other, true);
  base_ -= other.base_;
  return *this;
}

BiHomogeneousPoly& BiHomogeneousPoly::operator*=(const Rational& c) {
  base_ *= c;
  return *this;
}

BiHomogeneousPoly operator*(const BiHomogeneousPoly& a, const BiHomogeneousPoly& b) {
  a.require_compatible(b, false);
  return BiHomogeneousPoly(a.base_ * b.base_, a.t_count_, a.deg_t_ + b.deg_t_, a.deg_x_ + b.deg_x_);
}

}  // namespace birat
