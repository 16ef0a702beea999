#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpascal/field_elem.hpp"

namespace qpascal {

// Text syntax for field elements:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' exponent)?
//   atom  := integer | 'z(' integer ')' | 'L' | '(' expr ')'
//
// z(N) is the primitive root of unity exp(2*pi*i/N), L the indeterminate
// lambda_1. Exponents are integers, optionally negative and optionally
// parenthesised: z(9)^-2, L^(-1). Errors throw ParseError with a 0-based
// character position.
FieldElem parse_field_elem(std::string_view text);

// Splits on top-level commas (commas inside parentheses are kept).
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace qpascal
