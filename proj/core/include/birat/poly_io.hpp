#pragma once

// Text grammar for polynomials:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | base ('^' integer)?
//   base   := integer ('/' integer)? | identifier | '(' expr ')'
//
// Identifiers must be variables of the target ring. Juxtaposition ("2x",
// "x y") is rejected, and '/' is only legal inside a rational literal.
// to_string() prints terms in descending graded-lex order using the same
// grammar, so parse(to_string(p)) == p.

#include <cstddef>
#include <string>
#include <string_view>

#include "birat/polynomial.hpp"

namespace birat {

/// `line` and `column_offset` locate the text inside a larger file for error
/// messages (line 0 = standalone text).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 0,
                            std::size_t column_offset = 0);

std::string to_string(const Rational& r);
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace birat
