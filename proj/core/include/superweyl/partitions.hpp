#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "superweyl/rational.hpp"
#include "superweyl/root_datum.hpp"
#include "superweyl/weyl.hpp"

namespace superweyl {

/// Undirected graph whose vertices stand for sets of Π_0 indices (singletons,
/// except for the fused vertices of the tree graph). At most 32 vertices.
struct SimpleGraph {
  std::vector<std::vector<std::size_t>> vertices;
  std::vector<std::uint32_t> adj;

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const;
  bool connected() const;
  bool is_tree() const { return connected() && edge_count() + 1 == size(); }
  bool independent(std::uint32_t mask) const;
  /// "a2" for a singleton, "{a1,a4}" for a fused vertex.
  std::string vertex_name(std::size_t v) const;
};

/// Graph on the given Π_0 indices (all of Π_0 when empty); edge iff (α,β) ≠ 0.
SimpleGraph even_graph(const RootDatum& datum, const std::vector<std::size_t>& subset = {});

/// Nonempty independent sets as sorted vertex positions, ordered by size then lexicographically.
std::vector<std::vector<std::size_t>> totally_disconnected_subsets(const SimpleGraph& g);

struct PartitionReport {
  std::vector<std::uint64_t> counts;  // counts[k-1] = c_k
  Rational k_value;
};

constexpr std::size_t kDefaultGraphCap = 12;

/// Calls `visit` once per unordered partition of the vertex set into
/// independent blocks (bitmasks over vertex positions).
void for_each_partition(const SimpleGraph& g, const std::function<void(const std::vector<std::uint32_t>&)>& visit);

/// c_k = number of ordered k-partitions; k(G) = (−1)^{|G|} Σ (−1)^k c_k / k.
PartitionReport k_partition_counts(const SimpleGraph& g, std::size_t cap = kDefaultGraphCap);

/// w(J_1)···w(J_k) for disjoint totally disconnected subsets of Π_0.
WeylElement weyl_of_partition(const RootDatum& datum, const std::vector<std::vector<std::size_t>>& parts);

/// The graph G_{p,q} of sl(m+1,n+1): Π_0 with {α_{p−1},β_{q−1}} and {α_p,β_q}
/// fused into single vertices. p, q are 1-based with 2 ≤ p ≤ m, 2 ≤ q ≤ n.
SimpleGraph tree_graph_gpq(const RootDatum& datum, std::size_t p, std::size_t q);

std::uint64_t factorial(std::size_t n);

}  // namespace superweyl
