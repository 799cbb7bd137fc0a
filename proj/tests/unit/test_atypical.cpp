#include <doctest.h>

#include <optional>

#include "helpers.hpp"
#include "superweyl/atypical.hpp"

using namespace superweyl;
using testing::kind_of;

namespace {

// (1+Z_up) / (1+Z_down) over n symbols
ZSeries ratio(std::size_t n, int t, std::size_t up, std::size_t down) {
  return one_plus(n, t, up) * one_plus(n, t, down).inverse();
}

void check_routes_agree(const RootDatum& d, const Weight& lam, bool special = false) {
  const AtypicalContext ctx = make_atypical_context(d, lam, special);
  const auto oracle = coefficient_oracle(ctx);
  const auto closed = closed_form_coefficient(ctx);
  const auto parts = coefficient_by_partitions(ctx);
  CAPTURE(d.name());
  CAPTURE(format_weight(lam, d));
  CHECK(series_equal_to(oracle.value, closed.value, ctx.z_truncation));
  CHECK(series_equal_to(oracle.value, parts.value, ctx.z_truncation));
  CHECK_FALSE(oracle.value.is_zero());
}

TEST_CASE("sl(2,1) at the trivial weight") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(2, 1));
  const AtypicalContext ctx = make_atypical_context(d, d.zero(), false, 4);
  CHECK(ctx.gamma == 1);
  const ZSeries expected = ratio(2, 4, 1, 0);
  CHECK(series_equal_to(coefficient_oracle(ctx).value, expected, 4));
  CHECK(closed_form_coefficient(ctx).tag == FormTag::KRatio);
}

TEST_CASE("osp(2,4) at the trivial weight") {
  const RootDatum d = build_datum(AlgebraDescriptor::osp2(2));
  const AtypicalContext ctx = make_atypical_context(d, d.zero());
  CHECK(series_equal_to(coefficient_oracle(ctx).value, ratio(4, 3, 2, 3), 3));
}

TEST_CASE("G(3) M-form") {
  const RootDatum d = build_datum(AlgebraDescriptor::g3());
  const AtypicalContext ctx = make_atypical_context(d, testing::w(d, "omega[1]"));
  const std::size_t n = d.positive_odd().size();
  const ZSeries expected = one_plus(n, 3, 4) * one_plus(n, 3, 4) * one_plus(n, 3, 5).inverse() * one_plus(n, 3, 2).inverse();
  CHECK(series_equal_to(coefficient_oracle(ctx).value, expected, 3));
  CHECK(closed_form_coefficient(ctx).tag == FormTag::MForm);
}

// first of a few coefficient patterns giving a singly atypical weight of type g
std::optional<Weight> weight_of_type(const RootDatum& d, std::size_t g) {
  if (!d.positive_odd()[g].isotropic) return std::nullopt;
  for (int pattern = 0; pattern < (1 << d.rank0()); ++pattern) {
    std::vector<Rational> coeffs(d.rank0());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = 1 + (pattern >> i & 1);
    try {
      return singly_atypical_weight(d, coeffs, g);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NotSinglyAtypical);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("the three routes agree on generated weights") {
  for (const auto& desc : {AlgebraDescriptor::sl(3, 1), AlgebraDescriptor::sl(4, 3), AlgebraDescriptor::osp2(3),
                           AlgebraDescriptor::g3(), AlgebraDescriptor::f4()}) {
    const RootDatum d = build_datum(desc);
    std::size_t tried = 0;
    for (std::size_t g = 0; g < d.positive_odd().size(); ++g) {
      if (const auto lam = weight_of_type(d, g)) {
        check_routes_agree(d, *lam);
        ++tried;
      }
    }
    CHECK(tried > 0);
  }
}

TEST_CASE("A-sum is used in the interior of sl(4,3)") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(4, 3));
  bool saw_asum = false;
  for (std::size_t g = 0; g < d.positive_odd().size(); ++g) {
    if (const auto lam = weight_of_type(d, g)) {
      saw_asum = saw_asum || closed_form_coefficient(make_atypical_context(d, *lam)).tag == FormTag::ASum;
    }
  }
  CHECK(saw_asum);
}

TEST_CASE("tree coefficient") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(5, 3));
  for (std::size_t p = 2; p <= 4; ++p) {
    const F1Report r = coefficient_f1(d, p, 2);
    CHECK(r.by_enumeration == 1);
    CHECK(r.by_tree == 1);
    CHECK(r.tree.k_value == 1);
  }
  const auto table = table_functions(build_datum(AlgebraDescriptor::sl(4, 3)), 2, 2, 3);
  CHECK(series_rank(std::vector<ZSeries>(table.begin(), table.end())) == 7);
}

TEST_CASE("preconditions") {
  const RootDatum sl32 = build_datum(AlgebraDescriptor::sl(3, 2));
  CHECK(kind_of([&] { make_atypical_context(sl32, testing::w(sl32, "omega[1] + tau")); }) == ErrorKind::NotSinglyAtypical);
  CHECK(kind_of([&] { make_atypical_context(sl32, sl32.zero(), false, -1); }) == ErrorKind::TruncationTooSmall);
  CHECK(kind_of([&] { make_atypical_context(sl32, sl32.zero(), true); }) == ErrorKind::WrongFamily);
  const RootDatum b = build_datum(AlgebraDescriptor::osp1(2));
  CHECK(kind_of([&] { make_atypical_context(b, b.zero()); }) == ErrorKind::WrongFamily);
  const ZSeries a = one_plus(1, 2, 0);
  CHECK(kind_of([&] { series_equal_to(a, a, 5); }) == ErrorKind::TruncationTooSmall);
}
