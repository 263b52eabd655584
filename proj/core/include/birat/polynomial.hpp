#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birat/monomial.hpp"
#include "birat/ring.hpp"

namespace birat {

using Integer = mpz_class;
/// Exact rational scalar. GMP keeps it canonical: positive denominator,
/// coprime numerator and denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form; throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// in a map ordered by graded-lex; no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Nonzero constant.
  bool is_unit() const noexcept { return is_constant() && !is_zero(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;
  int degree_in(std::size_t var) const noexcept;
  /// Largest total degree over the variable index range [first, last).
  int degree_in_range(std::size_t first, std::size_t last) const noexcept;
  bool is_homogeneous() const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }

  /// Leading term under graded-lex; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned exponent) const;

  /// Same terms viewed in `target`, matching variables by name. Throws
  /// RingError when a variable that occurs in this polynomial is missing.
  Polynomial embed(const RingPtr& target) const;

  /// Coefficients with respect to `var`: result[k] is the coefficient of var^k
  /// (a polynomial in the same ring not involving var).
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Terms whose exponents on [first, last) equal `key`, with those exponents
  /// removed (set to zero).
  Polynomial coefficient_of(std::size_t first, std::size_t last, const Monomial& key) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes a scalar for one variable.
  Polynomial evaluate_at(std::size_t var, const Rational& value) const;

  /// Positive rational c such that p / c has coprime integer coefficients.
  Rational content() const;
  /// p / content(p), with the sign chosen so the leading coefficient is positive.
  Polynomial primitive() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Monomial& m, const Rational& c);
  void require_same_ring(const Polynomial& other, const char* op) const;

  RingPtr ring_;
  TermMap terms_;
};

enum class RingOp { add, sub, mul, pow };

/// a op b; for pow the exponent is taken from `exponent` and b is ignored.
/// Throws RingError when the rings differ.
Polynomial ring_op(const Polynomial& a, const Polynomial& b, RingOp op, unsigned exponent = 0);

/// Ring homomorphism sending each bound variable to its image and every
/// unbound variable to the variable of the same name in `target`.
using Bindings = std::map<std::string, Polynomial, std::less<>>;
Polynomial substitute(const Polynomial& p, const Bindings& bindings, const RingPtr& target);

/// Quotient q with q * b == a. Throws DivisionError when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Normalized gcd: primitive over the integers with positive leading
/// coefficient. gcd(0, 0) throws DomainError.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial gcd(std::span<const Polynomial> polys);

/// Pads every term with powers of `var` up to `target_degree`. If `var` is
/// not in the ring, the ring is extended by it. Throws DegreeError when
/// target_degree < deg(p).
Polynomial homogenize(const Polynomial& p, std::string_view var, int target_degree);
/// Sets `var` to 1.
Polynomial dehomogenize(const Polynomial& p, std::string_view var);

/// Canonical text form (see poly_io.hpp for the grammar).
std::string to_string(const Polynomial& p);

}  // namespace birat
