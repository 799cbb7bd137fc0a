#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superweyl/root_datum.hpp"

namespace superweyl {

/// Parses e.g. "omega[1] + 2*omega[2] + 3*omega[3] + tau" against a datum.
///
///   weight := ['-'] term (('+' | '-') term)*
///   term   := [coef '*'] atom
///   coef   := INT | INT '/' INT | '(' ['-'] coef ')'
///   atom   := 'omega[' i ']' | 'eps[' i ']' | 'delta[' j ']' | 'tau' | 'rho' | '0'
///
/// Whitespace is ignored. Throws ParseError / UnknownSymbol with the byte offset.
Weight parse_weight(std::string_view src, const RootDatum& datum);

/// Semicolon-separated list of weights.
std::vector<Weight> parse_weight_list(std::string_view src, const RootDatum& datum);

/// Coordinate form over eps[i] / delta[j] atoms; parse_weight reads it back.
std::string format_weight(const Weight& w, const RootDatum& datum);

}  // namespace superweyl
