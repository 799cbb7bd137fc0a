#include <doctest.h>

#include "helpers.hpp"
#include "superweyl/numerator.hpp"

using namespace superweyl;
using testing::kind_of;
using testing::w;

namespace {

RPoly one_minus(const Monomial& m) {
  RPoly p = RPoly::constant(m.size(), Rational(0), Rational(1));
  p.add_term(m, Rational(-1));
  return p;
}

}  // namespace

TEST_CASE("numerator of rho on an even datum is the Weyl denominator") {
  const RootDatum d = load_datum_file(testing::data_file("a3.datum"));
  RPoly denom = RPoly::constant(d.rank0(), Rational(0), Rational(1));
  for (const Root& a : d.positive_even()) {
    const auto c = d.pi_coordinates(a.weight);
    REQUIRE(c.has_value());
    Monomial m(d.rank0());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::int32_t>((*c)[i].get_num().get_si());
    denom = poly_mul(denom, one_minus(m));
  }
  CHECK(numerator(d, d.zero()) == denom);
}

TEST_CASE("rank one factor is 1 - X^s") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  const Weight lam = w(d, "2*omega[1] + 3*omega[3] + tau");
  const auto f = factor_numerator(d, lam);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[1].signature == Signature{4});
  CHECK(f.factors[1].poly == one_minus({0, 0, 4}));
  CHECK(product({f.factors[0].poly, f.factors[1].poly}, d.rank0()) == numerator(d, lam));
}

TEST_CASE("signature and x_lambda") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  const Weight lam = w(d, "omega[1] + 2*omega[2] + 3*omega[3] + tau");
  CHECK(full_signature(d, lam) == Signature{2, 3, 4});
  CHECK(x_lambda(d, lam, {0, 2}) == Monomial{2, 0, 4});
}

TEST_CASE("normalized character of sl(2,1) has dimension 4s") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(2, 1));
  for (int a : {0, 1, 3}) {
    Weight lam = scale(Rational(a), fundamental_weight(d, 0));
    while (!is_typical(d, lam)) lam = add(lam, d.tau());
    const RPoly chi = normalized_character(d, lam, 12);
    Rational dim = 0;
    for (const auto& [m, c] : chi.terms()) dim += c;
    CHECK(dim == 4 * (a + 1));
    CHECK(chi.constant_term() == 1);
  }
}

TEST_CASE("numerator preconditions") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  CHECK(kind_of([&] { numerator(d, d.zero()); }) == ErrorKind::NotTypical);
  CHECK(kind_of([&] { numerator(d, w(d, "-omega[1] + tau")); }) == ErrorKind::NotDominant);
}
