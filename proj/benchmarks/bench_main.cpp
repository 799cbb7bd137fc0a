#include <benchmark/benchmark.h>

#include "superweyl/atypical.hpp"
#include "superweyl/numerator.hpp"
#include "superweyl/partitions.hpp"
#include "superweyl/unifac.hpp"
#include "superweyl/weight_expr.hpp"

using namespace superweyl;

static void BM_FactorNumerator(benchmark::State& state) {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(static_cast<int>(state.range(0)), 2));
  Weight lam = d.zero();
  for (std::size_t i = 0; i < d.rank0(); ++i) lam = add(lam, fundamental_weight(d, i));
  while (!is_typical(d, lam)) lam = add(lam, d.tau());
  generate_group(d);
  for (auto _ : state) benchmark::DoNotOptimize(factor_numerator(d, lam));
}
BENCHMARK(BM_FactorNumerator)->DenseRange(3, 5);

static void BM_NegLog(benchmark::State& state) {
  RPoly p = RPoly::constant(3, Rational(0), Rational(1));
  for (std::size_t i = 0; i < 3; ++i) {
    Monomial m(3);
    m[i] = 1;
    p.add_term(m, Rational(-1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(neg_log(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NegLog)->DenseRange(4, 10, 3);

static void BM_PartitionCounts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SimpleGraph g;
  g.adj.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.vertices.push_back({v});
    if (v) {
      g.adj[v] |= 1u << (v - 1);
      g.adj[v - 1] |= 1u << v;
    }
  }
  for (auto _ : state) {
    std::size_t blocks = 0;
    for_each_partition(g, [&](const std::vector<std::uint32_t>& b) { blocks += b.size(); });
    benchmark::DoNotOptimize(blocks);
  }
}
BENCHMARK(BM_PartitionCounts)->DenseRange(4, 10, 2);

static void BM_AtypicalOracle(benchmark::State& state) {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(4, 3));
  std::vector<Rational> coeffs = {1, 2, 1, 1, 2};
  const Weight lam = singly_atypical_weight(d, coeffs, 4);
  const AtypicalContext ctx = make_atypical_context(d, lam, false, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_oracle(ctx));
}
BENCHMARK(BM_AtypicalOracle)->DenseRange(1, 3);

static void BM_Search(benchmark::State& state) {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  SearchOptions opt;
  opt.bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_counterexamples(d, opt));
}
BENCHMARK(BM_Search)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
