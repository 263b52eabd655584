#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace birat {

/// Exponent vector over the variables of a ring, with its total degree cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  std::size_t size() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e);

  /// Total degree restricted to the variable index range [first, last).
  std::uint32_t degree_in(std::size_t first, std::size_t last) const;

  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Throws DivisionError unless `other` divides `*this`.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then lexicographic
/// with variable 0 the most significant.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

/// All monomials of total degree `degree` in `num_vars` variables, in
/// descending graded-lex order (t1^d first).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree);

}  // namespace birat
