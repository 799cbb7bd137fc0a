#include <doctest.h>

#include "helpers.hpp"
#include "superweyl/numerator.hpp"
#include "superweyl/unifac.hpp"

using namespace superweyl;
using testing::w;

namespace {

const RootDatum& sl32() {
  static const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  return d;
}

std::vector<Weight> ws(const std::vector<std::string>& exprs) {
  std::vector<Weight> out;
  for (const auto& e : exprs) out.push_back(w(sl32(), e));
  return out;
}

}  // namespace

TEST_CASE("swapped component signatures give a counterexample") {
  const auto lhs = ws({"omega[1] + 2*omega[2] + 3*omega[3] + tau", "omega[1] + 4*omega[2] + 5*omega[3] + tau"});
  const auto rhs = ws({"omega[1] + 4*omega[2] + 3*omega[3] + tau", "omega[1] + 2*omega[2] + 5*omega[3] + tau"});
  const MatchReport r = match_factors(sl32(), lhs, rhs);
  CHECK(r.products_equal);
  CHECK(r.weight_sums_equal);
  CHECK_FALSE(r.sigma_hypothesis_holds);
  CHECK(r.conclusion == Conclusion::CrossMatchedCounterexample);
  // the whole numerators really do differ factor by factor
  CHECK_FALSE(numerator(sl32(), lhs[0]) == numerator(sl32(), rhs[0]));
  CHECK_FALSE(numerator(sl32(), lhs[0]) == numerator(sl32(), rhs[1]));
  CHECK(r.pairing.size() == 4);
}

TEST_CASE("a permutation of the same weights is unique factorization") {
  const auto lhs = ws({"omega[1] + tau", "2*omega[2] + omega[3] + 2*tau"});
  const std::vector<Weight> rhs = {lhs[1], lhs[0]};
  const MatchReport r = match_factors(sl32(), lhs, rhs);
  CHECK(r.conclusion == Conclusion::UniqueFactorization);
  CHECK(r.sigma == std::vector<std::size_t>{1, 0});
}

TEST_CASE("central shifts and unequal sums") {
  const auto lhs = ws({"omega[1] + 2*tau", "omega[2] + 2*tau"});
  const Weight z = w(sl32(), "eps[1] + eps[2] + eps[3]");
  const std::vector<Weight> shifted = {add(lhs[0], z), sub(lhs[1], z)};
  CHECK(match_factors(sl32(), lhs, shifted).conclusion == Conclusion::CentralShift);
  const std::vector<Weight> moved = {add(lhs[0], z), add(lhs[1], z)};
  CHECK(match_factors(sl32(), lhs, moved).conclusion == Conclusion::WeightSumsDiffer);
  const auto other = ws({"omega[1] + 2*tau", "omega[3] + 2*tau"});
  CHECK(match_factors(sl32(), lhs, other).conclusion == Conclusion::ProductsUnequal);
}

TEST_CASE("inputs must be typical") {
  CHECK(testing::kind_of([] { match_factors(sl32(), {sl32().zero()}, {sl32().zero()}); }) == ErrorKind::NotTypical);
}

TEST_CASE("search finds only cross-matched hits") {
  SearchOptions opt;
  opt.bound = 1;
  opt.threads = 2;
  const auto hits = search_counterexamples(sl32(), opt);
  CHECK_FALSE(hits.empty());
  for (const auto& h : hits) {
    CHECK(h.report.conclusion == Conclusion::CrossMatchedCounterexample);
    const RPoly a = poly_mul(numerator(sl32(), h.lambdas[0]), numerator(sl32(), h.lambdas[1]));
    const RPoly b = poly_mul(numerator(sl32(), h.mus[0]), numerator(sl32(), h.mus[1]));
    CHECK(a == b);
  }
  opt.limit = 1;
  CHECK(search_counterexamples(sl32(), opt).size() == 1);
  CHECK(search_counterexamples(build_datum(AlgebraDescriptor::sl(3, 1)), opt).empty());
}
