#include <doctest.h>

#include "helpers.hpp"
#include "superweyl/series.hpp"

using namespace superweyl;
using testing::kind_of;

namespace {

RPoly one_minus_x(std::size_t nvars, std::size_t k) {
  Monomial m(nvars);
  m[k] = 1;
  RPoly p = RPoly::constant(nvars, Rational(0), Rational(1));
  p.add_term(m, Rational(-1));
  return p;
}

}  // namespace

TEST_CASE("neg_log of 1 - x is the logarithmic series") {
  const RPoly l = neg_log(one_minus_x(1, 0), 8);
  for (int k = 1; k <= 8; ++k) CHECK(l.coefficient({k}) == Rational(1, k));
  CHECK(l.coefficient({9}) == 0);
  CHECK(l.constant_term() == 0);
}

TEST_CASE("neg_log turns products into sums") {
  const RPoly a = one_minus_x(2, 0);
  const RPoly b = one_minus_x(2, 1);
  const RPoly lhs = neg_log(poly_mul(a, b), 6);
  const RPoly rhs = poly_add(neg_log(a, 6), neg_log(b, 6));
  CHECK(lhs == rhs);
}

TEST_CASE("neg_log with caps") {
  RPoly p = one_minus_x(2, 0);
  p.add_term({0, 1}, Rational(-1));
  const RPoly l = neg_log(p, 10, {2, 1});
  for (const auto& [m, c] : l.terms()) {
    CHECK(m[0] <= 2);
    CHECK(m[1] <= 1);
  }
  // (x+y)^3/3 contributes 3x^2y/3
  CHECK(l.coefficient({2, 1}) == 1);
}

TEST_CASE("neg_log needs constant term one") {
  RPoly p(1, Rational(0));
  p.add_term({1}, Rational(1));
  CHECK(kind_of([&] { neg_log(p, 3); }) == ErrorKind::ConstantTermNotOne);
}

TEST_CASE("ZSeries inverse") {
  const ZSeries s = one_plus(2, 4, 0);
  const ZSeries inv = s.inverse();
  for (int k = 0; k <= 4; ++k) CHECK(inv.coefficient({k, 0}) == Rational(k % 2 ? -1 : 1));
  CHECK((s * inv) == ZSeries::constant(2, 4, 1));
  CHECK(kind_of([] { ZSeries::symbol(1, 3, 0).inverse(); }) == ErrorKind::ConstantTermNotOne);
}

TEST_CASE("ring mismatch") {
  CHECK(kind_of([] { poly_mul(one_minus_x(1, 0), one_minus_x(2, 0)); }) == ErrorKind::RingMismatch);
}

TEST_CASE("theta and lowest degree") {
  RPoly p = RPoly::constant(2, Rational(0), Rational(1));
  p.add_term({2, 0}, Rational(3));
  p.add_term({1, 1}, Rational(5));
  p.add_term({0, 3}, Rational(7));
  const RPoly t = theta(p, {0, 1});
  CHECK(t.terms().size() == 1);
  CHECK(t.coefficient({1, 1}) == 5);
  CHECK(lowest_degree(p) == 0);
  CHECK(lowest_degree(t) == 2);
  CHECK_FALSE(lowest_degree(RPoly(2, Rational(0))).has_value());
}

TEST_CASE("printing is colex") {
  RPoly p(2, Rational(0));
  p.add_term({0, 1}, Rational(1));
  p.add_term({2, 0}, Rational(-1));
  p.add_term({0, 0}, Rational(1));
  CHECK(format_poly(p, {"x", "y"}) == "1 - x^2 + y");
  CHECK(ColexLess{}({5, 0}, {0, 1}));
}

TEST_CASE("series rank") {
  const ZSeries a = one_plus(2, 2, 0);
  const ZSeries b = one_plus(2, 2, 1);
  CHECK(series_rank({a, b, a + b}) == 2);
  CHECK(series_rank({a, a.scaled(3)}) == 1);
}
