#pragma once

#include "newtonforge/polynomial.hpp"

#include <string>

namespace newtonforge {

/// Parse an expression over z with rational literals into a reduced
/// RationalFunction. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := 'z' | rational-literal | '(' expr ')'
/// Rational literals carry their own optional sign; there is no unary minus.
/// Decimals are converted exactly. Throws ParseError (with position) on
/// syntax errors and DomainError on zero denominators.
RationalFunction parse_rational(const std::string& text);

/// Parse a complex rational scalar for CLI flags: "2", "-1/2", "0.25",
/// "1+i", "1-2i", "3i", "-i", "1/2+3/4i".
RationalComplex parse_complex_rational(const std::string& text);

} // namespace newtonforge
