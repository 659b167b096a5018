#pragma once

#include <string>
#include <vector>

#include "cuspbif/poly.hpp"

namespace cuspbif {

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 64;

struct ExprSource {
  std::string text;
  std::vector<std::string> declared_vars{"t", "x1", "x2"};
};

/// Parses a polynomial expression into its expanded canonical form.
///
/// Grammar (whitespace-insensitive):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := ('-' | '+') unary | power
///     power   := primary ('^' integer)?
///     primary := integer ('/' integer)? | identifier | '(' expr ')'
///
/// Factors must be joined by an explicit '*'; "2x1" is rejected. Throws
/// ParseError with the offending character position.
Poly parse_poly(const ExprSource& src);

inline Poly parse_poly(const std::string& text) { return parse_poly(ExprSource{text}); }

}  // namespace cuspbif
