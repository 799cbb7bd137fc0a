#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superweyl {

/// Arbitrary-precision rational. Every coordinate, Gram entry and series
/// coefficient in the library is one of these; there is no floating point.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). Throws
/// Error{ErrorKind::ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace superweyl
