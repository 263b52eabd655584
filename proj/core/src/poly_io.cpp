#include "birat/poly_io.hpp"

#include <cctype>

#include "birat/errors.hpp"

namespace birat {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += to_string(m, *p.ring());
    } else {
      out += to_string(magnitude) + '*' + to_string(m, *p.ring());
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail_unexpected();
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

  [[noreturn]] void fail_unexpected() const {
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
      fail("implicit multiplication is not allowed; use '*'");
    }
    if (c == '/') fail("'/' is only allowed inside a rational literal such as 3/4");
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial b = base();
    if (accept('^')) {
      skip_space();
      const Integer e = integer_literal();
      if (e > 4096) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of polynomial");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = integer_literal();
      Integer den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator in rational literal");
        }
      }
      return Polynomial::constant(ring_, make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (!ring_->contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "' (ring " + describe(*ring_) + ")");
      }
      return Polynomial::variable(ring_, name);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return Parser(text, ring, line, column_offset).parse();
}

}  // namespace birat
