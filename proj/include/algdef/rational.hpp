#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace algdef {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading '-'). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

}  // namespace algdef
