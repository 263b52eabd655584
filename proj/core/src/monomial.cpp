#include "birat/monomial.hpp"

#include <numeric>

#include "birat/errors.hpp"

namespace birat {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0})) {}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exponents_.at(i) + e;
  exponents_[i] = e;
}

std::uint32_t Monomial::degree_in(std::size_t first, std::size_t last) const {
  std::uint32_t d = 0;
  for (std::size_t i = first; i < last && i < exponents_.size(); ++i) d += exponents_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw DivisionError("monomial quotient is not a monomial");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] -= other.exponents_[i];
  out.degree_ -= other.degree_;
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void fill(std::vector<Monomial>& out, std::vector<std::uint32_t>& current, std::size_t var,
          std::uint32_t remaining) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current[var] = e;
    fill(out, current, var + 1, remaining - e);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> current(num_vars, 0);
  fill(out, current, 0, degree);
  return out;
}

}  // namespace birat
