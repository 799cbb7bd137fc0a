#include "superweyl/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "superweyl/error.hpp"

namespace superweyl {

std::size_t SimpleGraph::edge_count() const {
  std::size_t e = 0;
  for (std::uint32_t a : adj) e += static_cast<std::size_t>(std::popcount(a));
  return e / 2;
}

bool SimpleGraph::connected() const {
  if (vertices.empty()) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < size(); ++v)
      if (frontier & (1u << v)) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(size());
}

bool SimpleGraph::independent(std::uint32_t mask) const {
  for (std::size_t v = 0; v < size(); ++v)
    if ((mask & (1u << v)) && (adj[v] & mask)) return false;
  return true;
}

std::string SimpleGraph::vertex_name(std::size_t v) const {
  const auto& members = vertices.at(v);
  if (members.size() == 1) return "a" + std::to_string(members[0] + 1);
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? ",a" : "a") + std::to_string(members[i] + 1);
  return s + "}";
}

namespace {

SimpleGraph graph_on(const RootDatum& datum, std::vector<std::vector<std::size_t>> vertices) {
  if (vertices.size() > 32) fail(ErrorKind::GraphTooLarge, "graphs are limited to 32 vertices");
  SimpleGraph g;
  g.vertices = std::move(vertices);
  g.adj.assign(g.size(), 0);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      bool edge = false;
      for (std::size_t a : g.vertices[u])
        for (std::size_t b : g.vertices[v])
          if (datum.inner(datum.alpha(a).weight, datum.alpha(b).weight) != 0) edge = true;
      if (edge) {
        g.adj[u] |= 1u << v;
        g.adj[v] |= 1u << u;
      }
    }
  }
  return g;
}

}  // namespace

SimpleGraph even_graph(const RootDatum& datum, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> verts;
  if (subset.empty()) {
    for (std::size_t i = 0; i < datum.rank0(); ++i) verts.push_back({i});
  } else {
    std::vector<std::size_t> s = subset;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(ErrorKind::OverlappingParts, "repeated vertex in subset");
    for (std::size_t i : s) {
      if (i >= datum.rank0()) fail(ErrorKind::IndexOutOfRange, "even simple root index out of range");
      verts.push_back({i});
    }
  }
  return graph_on(datum, std::move(verts));
}

std::vector<std::vector<std::size_t>> totally_disconnected_subsets(const SimpleGraph& g) {
  if (g.size() > 20) fail(ErrorKind::GraphTooLarge, "too many vertices to list independent sets");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
    if (!g.independent(mask)) continue;
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (mask & (1u << v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void for_each_partition(const SimpleGraph& g, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> blocks;
  // restricted-growth assignment: vertex v joins an existing block or opens the next one
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v == g.size()) {
      visit(blocks);
      return;
    }
    const std::uint32_t bit = 1u << v;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (g.adj[v] & blocks[b]) continue;
      blocks[b] |= bit;
      place(v + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    place(v + 1);
    blocks.pop_back();
  };
  if (g.size() > 0) place(0);
}

PartitionReport k_partition_counts(const SimpleGraph& g, std::size_t cap) {
  if (g.size() > cap) {
    fail(ErrorKind::GraphTooLarge, "graph has " + std::to_string(g.size()) + " vertices, cap is " + std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<std::vector<std::uint32_t>, PartitionReport> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(g.adj); it != memo.end()) return it->second;
  }
  PartitionReport r;
  r.counts.assign(g.size(), 0);
  for_each_partition(g, [&](const std::vector<std::uint32_t>& blocks) { ++r.counts[blocks.size() - 1]; });
  r.k_value = 0;
  for (std::size_t k = 1; k <= g.size(); ++k) {
    r.counts[k - 1] *= factorial(k);
    const Rational term = Rational(mpz_class(std::to_string(r.counts[k - 1])), mpz_class(static_cast<unsigned long>(k)));
    r.k_value += k % 2 ? Rational(-term) : term;
  }
  if (g.size() % 2) r.k_value = -r.k_value;
  r.k_value.canonicalize();
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(g.adj, r);
  return r;
}

WeylElement weyl_of_partition(const RootDatum& datum, const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<bool> used(datum.rank0(), false);
  std::vector<std::size_t> word;
  for (const auto& part : parts) {
    std::vector<std::size_t> sorted = part;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= datum.rank0()) fail(ErrorKind::IndexOutOfRange, "even simple root index out of range");
      if (used[sorted[i]]) fail(ErrorKind::OverlappingParts, "a simple root appears in two parts");
      used[sorted[i]] = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (datum.inner(datum.alpha(sorted[i]).weight, datum.alpha(sorted[j]).weight) != 0) {
          fail(ErrorKind::NotTotallyDisconnected,
               "a" + std::to_string(sorted[j] + 1) + " and a" + std::to_string(sorted[i] + 1) + " are joined");
        }
      }
      word.push_back(sorted[i]);
    }
  }
  return element_from_word(datum, word);
}

SimpleGraph tree_graph_gpq(const RootDatum& datum, std::size_t p, std::size_t q) {
  if (datum.descriptor().family != Family::A) fail(ErrorKind::WrongFamily, "G_{p,q} is defined for sl(m+1,n+1)");
  const auto m = static_cast<std::size_t>(datum.descriptor().m);
  const auto n = static_cast<std::size_t>(datum.descriptor().n);
  if (p < 2 || p > m || q < 2 || q > n) {
    fail(ErrorKind::IndexNotInterior, "need 2 <= p <= " + std::to_string(m) + " and 2 <= q <= " + std::to_string(n));
  }
  auto alpha = [](std::size_t i) { return i - 1; };         // α_i
  auto beta = [m](std::size_t j) { return m + j - 1; };     // β_j
  std::vector<std::vector<std::size_t>> verts;
  for (std::size_t i = 1; i <= m; ++i) {
    if (i == p - 1) verts.push_back({alpha(p - 1), beta(q - 1)});
    else if (i == p) verts.push_back({alpha(p), beta(q)});
    else verts.push_back({alpha(i)});
  }
  for (std::size_t j = 1; j <= n; ++j) {
    if (j != q - 1 && j != q) verts.push_back({beta(j)});
  }
  return graph_on(datum, std::move(verts));
}

}  // namespace superweyl
