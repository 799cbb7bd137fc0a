#pragma once

#include <functional>
#include <string>

#include "superweyl/error.hpp"
#include "superweyl/root_datum.hpp"
#include "superweyl/weight_expr.hpp"

namespace testing {

inline superweyl::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const superweyl::Error& e) {
    return e.kind();
  }
  return superweyl::ErrorKind::Internal;
}

inline superweyl::Rational q(long num, long den = 1) {
  superweyl::Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string data_file(const std::string& name) { return std::string(SUPERWEYL_TEST_DATA) + "/" + name; }

inline superweyl::Weight w(const superweyl::RootDatum& d, const std::string& expr) { return superweyl::parse_weight(expr, d); }

}  // namespace testing
