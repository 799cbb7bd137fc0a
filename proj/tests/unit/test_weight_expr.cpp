#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "superweyl/weight_expr.hpp"

using namespace superweyl;

namespace {

std::string message_of(const RootDatum& d, const std::string& src) {
  try {
    parse_weight(src, d);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("basic parsing") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  CHECK(parse_weight("0", d) == d.zero());
  CHECK(parse_weight("eps[1] - delta[2]", d) == sub(d.eps_vectors()[0], d.delta_vectors()[1]));
  CHECK(parse_weight("2*omega[1]", d) == scale(Rational(2), fundamental_weight(d, 0)));
  CHECK(parse_weight("(-1/2)*tau + rho", d) == add(scale(Rational(-1, 2), d.tau()), d.rho()));
  CHECK(parse_weight("-eps[2]", d) == scale(Rational(-1), d.eps_vectors()[1]));
  CHECK(parse_weight_list("eps[1]; eps[2]", d).size() == 2);
}

TEST_CASE("errors carry byte offsets") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  CHECK(testing::kind_of([&] { parse_weight("eps[1] +", d); }) == ErrorKind::ParseError);
  CHECK(testing::kind_of([&] { parse_weight("eps[4]", d); }) == ErrorKind::UnknownSymbol);
  CHECK(testing::kind_of([&] { parse_weight("omega[1] + foo", d); }) == ErrorKind::UnknownSymbol);
  CHECK(message_of(d, "omega[1] + foo").find("at byte 11") != std::string::npos);
  CHECK(message_of(d, "eps[1] * 2").find("at byte") != std::string::npos);
  CHECK(testing::kind_of([&] { parse_weight("omega[9]", d); }) == ErrorKind::UnknownSymbol);
}

TEST_CASE("format and parse round trip") {
  std::mt19937_64 rng(12345);
  for (const auto& desc : {AlgebraDescriptor::sl(3, 2), AlgebraDescriptor::osp2(2), AlgebraDescriptor::g3(), AlgebraDescriptor::f4()}) {
    const RootDatum d = build_datum(desc);
    for (int trial = 0; trial < 25; ++trial) {
      Weight v = d.zero();
      for (std::size_t i = 0; i < d.rank0(); ++i) {
        v = add(v, scale(testing::q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)), fundamental_weight(d, i)));
      }
      v = add(v, scale(Rational(static_cast<long>(rng() % 5) - 2), d.tau()));
      const std::string s = format_weight(v, d);
      CAPTURE(s);
      CHECK(parse_weight(s, d) == v);
    }
  }
}
