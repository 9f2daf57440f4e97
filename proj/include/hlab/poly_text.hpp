#pragma once

#include <string>
#include <string_view>

#include "hlab/poly.hpp"

namespace hlab {

// Text syntax: a sum of terms such as "5/2*x^3 - 3/2*x^1 + 7". Factors inside
// a term are joined by '*' and may be rationals (p or p/q), the variable with
// an optional non-negative exponent, one of the parameters a, b, c, or a
// parenthesised sub-expression. A term may end in "/q" for a positive integer
// q, as in "(5*x^3 - 3*x)/2". Whitespace is ignored everywhere.

/// Parse a parameter-free polynomial. Throws ParseError.
Poly parse_poly(std::string_view text, char var = 'x');

/// Parse a polynomial whose coefficients may be affine in a, b, c.
ParamPoly parse_param_poly(std::string_view text, char var = 'x');

/// Descending powers, e.g. "5/2*x^3 - 3/2*x^1"; the zero polynomial is "0".
std::string to_string(const Poly& p, char var = 'x');
std::string to_string(const ParamPoly& p, char var = 'x');

}  // namespace hlab
