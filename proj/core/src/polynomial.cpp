#include "birat/polynomial.hpp"

#include <algorithm>

#include "birat/errors.hpp"

namespace birat {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingError("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw RingError("polynomial without a ring");
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [m, c] : terms_) {
    if (m.size() != ring_->size()) throw RingError("monomial length does not match ring " + describe(*ring_));
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial(p.ring_->size()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw RingError("variable '" + std::string(name) + "' not in ring " + describe(*ring));
  Polynomial p(std::move(ring));
  Monomial m(p.ring_->size());
  m.set(*idx, 1);
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->size()) throw RingError("monomial length does not match ring");
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::degree_in(std::size_t var) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

int Polynomial::degree_in_range(std::size_t first, std::size_t last) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(first, last)));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(ring_->size())); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other, const char* op) const {
  if (!same_ring(ring_, other.ring_)) {
    throw RingError(std::string(op) + ": ring mismatch " + describe(*ring_) + " vs " + describe(*other.ring_));
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other, "sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "mul");
  Polynomial out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial out(*this);
    out.ring_ = target;
    return out;
  }
  std::vector<std::size_t> map(ring_->size(), target->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (auto j = target->index_of(ring_->variable(i))) map[i] = *j;
  }
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial nm(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == target->size()) {
        throw RingError("variable '" + ring_->variable(i) + "' missing from ring " + describe(*target));
      }
      nm.set(map[i], m[i]);
    }
    out.add_term(nm, c);
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d + 1, 0)), Polynomial(ring_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set(var, 0);
    out[m[var]].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::coefficient_of(std::size_t first, std::size_t last, const Monomial& key) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    bool match = true;
    for (std::size_t i = first; i < last; ++i) {
      if (m[i] != key[i]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    Monomial rest = m;
    for (std::size_t i = first; i < last; ++i) rest.set(i, 0);
    out.add_term(rest, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw RingError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::evaluate_at(std::size_t var, const Rational& value) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::uint32_t k = 0; k < m[var]; ++k) v *= value;
    Monomial rest = m;
    rest.set(var, 0);
    out.add_term(rest, v);
  }
  return out;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  Polynomial out(*this);
  for (auto& [m, coeff] : out.terms_) coeff /= c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial ring_op(const Polynomial& a, const Polynomial& b, RingOp op, unsigned exponent) {
  switch (op) {
    case RingOp::add:
      return a + b;
    case RingOp::sub:
      return a - b;
    case RingOp::mul:
      return a * b;
    case RingOp::pow:
      return a.pow(exponent);
  }
  throw DomainError("unknown ring operation");
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings, const RingPtr& target) {
  const auto& ring = *p.ring();
  // Image of each source variable, and a cache of its powers.
  std::vector<Polynomial> images;
  images.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& name = ring.variable(i);
    if (auto it = bindings.find(name); it != bindings.end()) {
      if (!same_ring(it->second.ring(), target)) {
        throw RingError("binding for '" + name + "' is not in the target ring " + describe(*target));
      }
      images.push_back(it->second);
    } else if (target->contains(name)) {
      images.push_back(Polynomial::variable(target, name));
    } else {
      images.push_back(Polynomial(target));  // placeholder; only an error if used
    }
  }
  std::vector<std::vector<Polynomial>> powers(ring.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const auto& name = ring.variable(i);
      if (!bindings.contains(name) && !target->contains(name)) {
        throw RingError("variable '" + name + "' has no binding and is absent from " + describe(*target));
      }
      t *= power(i, m[i]);
    }
    out += t;
  }
  return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingError("exact_divide: ring mismatch");
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  Polynomial quotient(a.ring());
  if (b.is_constant()) {
    quotient = a;
    quotient *= Rational(1) / b.leading_coefficient();
    return quotient;
  }
  const Monomial& lead = b.leading_monomial();
  const Rational& lead_c = b.leading_coefficient();
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Monomial& m = rest.leading_monomial();
    if (!lead.divides(m)) throw DivisionError("divisor does not divide dividend exactly");
    Polynomial t = Polynomial::term(a.ring(), m / lead, rest.leading_coefficient() / lead_c);
    rest -= t * b;
    quotient += t;
  }
  return quotient;
}

Polynomial homogenize(const Polynomial& p, std::string_view var, int target_degree) {
  if (target_degree < p.total_degree()) {
    throw DegreeError("homogenize: target degree " + std::to_string(target_degree) + " below degree " +
                      std::to_string(p.total_degree()));
  }
  RingPtr ring = p.ring();
  if (!ring->contains(var)) ring = union_ring(ring, make_ring({std::string(var)}));
  const Polynomial src = p.embed(ring);
  const std::size_t idx = *ring->index_of(var);
  Polynomial out(ring);
  for (const auto& [m, c] : src.terms()) {
    Monomial nm = m;
    nm.set(idx, m[idx] + static_cast<std::uint32_t>(target_degree) - m.degree());
    out += Polynomial::term(ring, nm, c);
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& p, std::string_view var) {
  auto idx = p.ring()->index_of(var);
  if (!idx) return p;
  return p.evaluate_at(*idx, 1);
}

}  // namespace birat
