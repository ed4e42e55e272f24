#pragma once

#include "hnkit/polynomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace hnkit {

// Canonical polynomial text
// -------------------------
// Terms are printed graded-lex descending and joined by " + " / " - ".
// Coefficients: real `a`, imaginary `bi` (`i` for 1), complex `(a+bi)` or
// `(a-bi)`, with rationals as `p/q`. Monomials are `z1^3*z2`; exponent 1 and
// coefficient 1 are omitted. Example: `(1/2+3i)*z1^2*z2 - z3^3 + 5`.
//
// The parser accepts the canonical form plus general expressions: `+ - * ^`,
// parentheses, and division by a nonzero constant. Whitespace is ignored
// between tokens. A rational literal `p/q` binds tighter than `/`, and a number
// immediately followed by `i` is an imaginary literal, so `1/2i` reads as i/2.

/// Parses `text`. The variable count is the largest index that appears,
/// raised to `min_vars` if that is larger (and never below 1).
Polynomial parse_polynomial(std::string_view text, std::size_t min_vars = 0);

std::string format_polynomial(const Polynomial& p);

}  // namespace hnkit
