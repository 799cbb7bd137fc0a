#include <doctest.h>

#include "helpers.hpp"
#include "superweyl/root_datum.hpp"

using namespace superweyl;
using testing::kind_of;

namespace {

// ½Σ even − ½Σ odd, recomputed from the root lists
Weight rho_by_hand(const RootDatum& d) {
  Weight r = d.zero();
  for (const Root& a : d.positive_even()) r = add(r, scale(Rational(1, 2), a.weight));
  for (const Root& g : d.positive_odd()) r = sub(r, scale(Rational(1, 2), g.weight));
  return r;
}

}  // namespace

TEST_CASE("root counts of the builtin families") {
  struct Case {
    AlgebraDescriptor desc;
    std::size_t even, odd, rank0;
  };
  // sl(m,n): m(m-1)/2 + n(n-1)/2 even, mn odd
  const Case cases[] = {
      {AlgebraDescriptor::sl(2, 1), 1, 2, 1},  {AlgebraDescriptor::sl(3, 2), 4, 6, 3},
      {AlgebraDescriptor::sl(4, 3), 9, 12, 5}, {AlgebraDescriptor::osp2(2), 4, 4, 2},
      {AlgebraDescriptor::g3(), 7, 7, 2},      {AlgebraDescriptor::f4(), 10, 8, 3},
  };
  for (const auto& c : cases) {
    const RootDatum d = build_datum(c.desc);
    CAPTURE(d.name());
    CHECK(d.positive_even().size() == c.even);
    CHECK(d.positive_odd().size() == c.odd);
    CHECK(d.rank0() == c.rank0);
  }
}

TEST_CASE("rho matches the root lists and pairs to half the norm on simple roots") {
  for (const auto& desc : {AlgebraDescriptor::sl(3, 2), AlgebraDescriptor::osp1(2), AlgebraDescriptor::osp2(3),
                           AlgebraDescriptor::g3(), AlgebraDescriptor::f4()}) {
    const RootDatum d = build_datum(desc);
    CAPTURE(d.name());
    CHECK(d.rho() == rho_by_hand(d));
    for (const Root& a : d.simple_roots()) CHECK(d.inner(d.rho(), a.weight) == d.inner(a.weight, a.weight) / 2);
  }
}

TEST_CASE("fundamental weights are dual to even simple coroots") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(4, 3));
  for (std::size_t i = 0; i < d.rank0(); ++i) {
    const Weight om = fundamental_weight(d, i);
    for (std::size_t j = 0; j < d.rank0(); ++j) CHECK(d.pairing(om, d.alpha(j).weight) == Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("tau is orthogonal to the even simple roots and typicality") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  for (std::size_t i = 0; i < d.rank0(); ++i) CHECK(d.inner(d.tau(), d.alpha(i).weight) == 0);
  CHECK_FALSE(is_typical(d, d.zero()));
  const Atypicality a = atypicality_type(d, d.zero());
  CHECK(a.count >= 1);
  CHECK(is_typical(d, testing::w(d, "omega[1] + tau")));
}

TEST_CASE("central vectors are equivalent to zero in sl") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  CHECK(d.equivalent(testing::w(d, "eps[1] + eps[2] + eps[3] - delta[1] - delta[2]"), d.zero()));
  CHECK_FALSE(d.equivalent(testing::w(d, "eps[1]"), d.zero()));
}

TEST_CASE("rejected descriptors") {
  CHECK(kind_of([] { build_datum(AlgebraDescriptor::sl(1, 1)); }) == ErrorKind::UnsupportedFamily);
  CHECK(kind_of([] { build_datum(AlgebraDescriptor::sl(2, 2)); }) == ErrorKind::UnsupportedFamily);
  CHECK(kind_of([] { build_datum(AlgebraDescriptor::osp1(1)); }) == ErrorKind::UnsupportedFamily);
}

TEST_CASE("datum files round trip") {
  for (const auto& desc : {AlgebraDescriptor::sl(3, 2), AlgebraDescriptor::g3()}) {
    const RootDatum d = build_datum(desc);
    const RootDatum e = parse_datum(emit_datum(d));
    CHECK(e.positive_odd().size() == d.positive_odd().size());
    CHECK(e.rho() == d.rho());
    CHECK(emit_datum(e) == emit_datum(d));
  }
}

TEST_CASE("custom osp(3,2) datum") {
  const RootDatum d = load_datum_file(testing::data_file("b11.datum"));
  CHECK_FALSE(d.type_one());
  CHECK(d.rank0() == 1);
  CHECK(d.rho() == rho_by_hand(d));
  CHECK(d.rho() == testing::w(d, "1/2*eps[1] - 1/2*delta[1]"));
  // delta is odd but not isotropic
  bool saw_nonisotropic = false;
  for (const Root& g : d.positive_odd()) saw_nonisotropic = saw_nonisotropic || !g.isotropic;
  CHECK(saw_nonisotropic);
}

TEST_CASE("a datum without odd roots loads") {
  const RootDatum d = load_datum_file(testing::data_file("a3.datum"));
  CHECK(d.positive_odd().empty());
  CHECK(d.rank0() == 3);
  CHECK(d.components().size() == 1);
}

TEST_CASE("malformed datum files") {
  CHECK(kind_of([] { parse_datum("family: x\nambient_dim: two\n"); }) == ErrorKind::MalformedDatumFile);
  CHECK(kind_of([] { parse_datum("family: x\nambient_dim: 2\nbasis: eps eps\ngram: 1 0\ngram: 0 1\nsimple: 1 ; even\n"); }) ==
        ErrorKind::MalformedDatumFile);
  CHECK(kind_of([] { load_datum_file("/nonexistent/file.datum"); }) == ErrorKind::MalformedDatumFile);
}
