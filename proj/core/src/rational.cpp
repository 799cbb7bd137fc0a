#include "superweyl/rational.hpp"

#include <cctype>

#include "superweyl/error.hpp"

namespace superweyl {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::MalformedDatumFile: return "MalformedDatumFile";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IsotropicRoot: return "IsotropicRoot";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoSecondComponent: return "NoSecondComponent";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::NegativeExponentAfterCollapse: return "NegativeExponentAfterCollapse";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotTypical: return "NotTypical";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::NotTotallyDisconnected: return "NotTotallyDisconnected";
    case ErrorKind::OverlappingParts: return "OverlappingParts";
    case ErrorKind::IndexNotInterior: return "IndexNotInterior";
    case ErrorKind::NotSinglyAtypical: return "NotSinglyAtypical";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::MixedAtypicalityTypes: return "MixedAtypicalityTypes";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::ParseError || kind == ErrorKind::UnknownSymbol ||
         kind == ErrorKind::MalformedDatumFile;
}

}  // namespace superweyl
