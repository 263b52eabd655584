#pragma once

#include <cstddef>

#include "birat/polynomial.hpp"

namespace birat {

/// Polynomial over a ring whose first `t_count` variables are the parameter
/// variables t and whose remaining variables are the coordinates X. Every term
/// has t-degree deg_t and X-degree deg_x.
class BiHomogeneousPoly {
 public:
  /// Throws DegreeError when some term has the wrong bidegree.
  BiHomogeneousPoly(Polynomial base, std::size_t t_count, unsigned deg_t, unsigned deg_x);

  /// Reads the bidegree off the leading term. Zero is rejected (DegreeError)
  /// because its bidegree is undefined.
  static BiHomogeneousPoly infer(Polynomial base, std::size_t t_count);

  const Polynomial& base() const noexcept { return base_; }
  std::size_t t_count() const noexcept { return t_count_; }
  unsigned deg_t() const noexcept { return deg_t_; }
  unsigned deg_x() const noexcept { return deg_x_; }
  bool is_zero() const noexcept { return base_.is_zero(); }

  /// Coefficient of the t-monomial `key` (exponents on the t-variables only),
  /// as a polynomial in the X-variables of the same ring.
  Polynomial coefficient_of_t(const Monomial& key) const;

  BiHomogeneousPoly& operator+=(const BiHomogeneousPoly& other);
  BiHomogeneousPoly& operator-=(const BiHomogeneousPoly& other);
  BiHomogeneousPoly& operator*=(const Rational& c);

  friend BiHomogeneousPoly operator+(BiHomogeneousPoly a, const BiHomogeneousPoly& b) { return a += b; }
  friend BiHomogeneousPoly operator-(BiHomogeneousPoly a, const BiHomogeneousPoly& b) { return a -= b; }
  friend BiHomogeneousPoly operator*(const BiHomogeneousPoly& a, const BiHomogeneousPoly& b);
  friend BiHomogeneousPoly operator*(BiHomogeneousPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const BiHomogeneousPoly& a, const BiHomogeneousPoly& b) = default;

 private:
  void require_compatible(const BiHomogeneousPoly& other, bool same_bidegree) const;

  Polynomial base_;
  std::size_t t_count_;
  unsigned deg_t_;
  unsigned deg_x_;
};

}  // namespace birat
