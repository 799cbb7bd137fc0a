#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "superweyl/partitions.hpp"

using namespace superweyl;
using testing::kind_of;

namespace {

SimpleGraph graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph g;
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back({v});
  g.adj.assign(n, 0);
  for (auto [a, b] : edges) {
    g.adj[a] |= 1u << b;
    g.adj[b] |= 1u << a;
  }
  return g;
}

// ordered partitions into k independent blocks, by colouring every vertex
std::vector<std::uint64_t> brute_counts(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::size_t> colour(n, 0);
  while (true) {
    std::size_t k = 0;
    for (auto c : colour) k = std::max(k, c + 1);
    std::vector<std::uint32_t> blocks(k, 0);
    for (std::size_t v = 0; v < n; ++v) blocks[colour[v]] |= 1u << v;
    bool ok = true;
    for (auto b : blocks) {
      if (!b) ok = false;
      for (std::size_t v = 0; v < n && ok; ++v)
        if ((b >> v & 1) && (g.adj[v] & b)) ok = false;
    }
    if (ok) ++counts[k - 1];
    std::size_t i = 0;
    while (i < n && ++colour[i] == n) colour[i++] = 0;
    if (i == n) break;
  }
  return counts;
}

Rational k_from(const std::vector<std::uint64_t>& c) {
  Rational k = 0;
  for (std::size_t j = 1; j <= c.size(); ++j) k += testing::q((j % 2 ? -1 : 1) * static_cast<long>(c[j - 1]), static_cast<long>(j));
  return c.size() % 2 ? Rational(-k) : k;
}

}  // namespace

TEST_CASE("small graphs") {
  const auto path2 = k_partition_counts(graph(2, {{0, 1}}));
  CHECK(path2.counts == std::vector<std::uint64_t>{0, 2});
  CHECK(path2.k_value == 1);
  const auto path3 = k_partition_counts(graph(3, {{0, 1}, {1, 2}}));
  CHECK(path3.counts == std::vector<std::uint64_t>{0, 2, 6});
  const auto isolated = k_partition_counts(graph(2, {}));
  CHECK(isolated.counts == std::vector<std::uint64_t>{1, 2});
  CHECK(isolated.k_value == 0);
}

TEST_CASE("random graphs agree with colouring enumeration") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 2) edges.push_back({a, b});
    const SimpleGraph g = graph(n, edges);
    const auto expected = brute_counts(g);
    const auto r = k_partition_counts(g);
    CHECK(r.counts == expected);
    CHECK(r.k_value == k_from(expected));
  }
}

TEST_CASE("trees have k equal to one") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < n; ++v) edges.push_back({rng() % v, v});
    const SimpleGraph g = graph(n, edges);
    REQUIRE(g.is_tree());
    CHECK(k_partition_counts(g).k_value == 1);
  }
}

TEST_CASE("even graph of sl(4,3) and the fused tree") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(4, 3));
  const SimpleGraph g = even_graph(d);
  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 3);
  CHECK_FALSE(g.connected());
  const SimpleGraph t = tree_graph_gpq(d, 2, 2);
  CHECK(t.size() == 3);
  CHECK(t.is_tree());
  CHECK(t.vertex_name(0) == "{a1,a4}");
  CHECK(kind_of([&] { tree_graph_gpq(d, 1, 2); }) == ErrorKind::IndexNotInterior);
  CHECK(kind_of([] { tree_graph_gpq(build_datum(AlgebraDescriptor::g3()), 2, 2); }) == ErrorKind::WrongFamily);
}

TEST_CASE("totally disconnected subsets") {
  const SimpleGraph g = graph(3, {{0, 1}, {1, 2}});
  const auto s = totally_disconnected_subsets(g);
  const std::vector<std::vector<std::size_t>> expected = {{0}, {1}, {2}, {0, 2}};
  CHECK(s == expected);
}

TEST_CASE("Weyl element of a partition") {
  const RootDatum d = load_datum_file(testing::data_file("a3.datum"));
  const WeylElement e = weyl_of_partition(d, {{0, 2}, {1}});
  CHECK(e.length() == 3);
  CHECK(kind_of([&] { weyl_of_partition(d, {{0, 1}}); }) == ErrorKind::NotTotallyDisconnected);
  CHECK(kind_of([&] { weyl_of_partition(d, {{0}, {0, 2}}); }) == ErrorKind::OverlappingParts);
  CHECK(kind_of([&] { weyl_of_partition(d, {{7}}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("graph cap") {
  CHECK(kind_of([] { k_partition_counts(graph(13, {}), 12); }) == ErrorKind::GraphTooLarge);
}
