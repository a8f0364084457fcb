#ifndef CONDORCET_GRAPH_HPP
#define CONDORCET_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "order.hpp"

namespace condorcet {

/// Undirected simple graph on vertices 0..V-1.
class SimpleGraph {
public:
  explicit SimpleGraph(std::size_t vertices = 0) : adjacency_(vertices) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }

  void add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw PreconditionError("self-loop");
    if (a > b) std::swap(a, b);
    if (b >= adjacency_.size()) throw PreconditionError("edge to a missing vertex");
    if (std::find(adjacency_[a].begin(), adjacency_[a].end(), b) != adjacency_[a].end()) return;
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    edges_.emplace_back(a, b);
  }

  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> distances_from(std::size_t source) const {
    std::vector<std::size_t> dist(vertex_count(), kUnreachable);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adjacency_[v])
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    return dist;
  }

private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// G_D: vertices are the domain's orders (by index), edges the pairs with no other
/// member of D between them. permutahedron_edge[e] tells whether edge e is a single
/// neighbouring swap.
struct DomainGraph {
  Domain domain;
  SimpleGraph graph;
  std::vector<bool> permutahedron_edge;
};

inline constexpr std::size_t kDefaultGraphCap = 500;

namespace detail {

/// Bit (a,b), a < b, is set when the order ranks a over b.
inline std::vector<std::uint64_t> pair_bits(const LinearOrder& u) {
  const std::size_t n = u.size();
  std::vector<std::uint64_t> bits((choose2(n) + 63) / 64, 0);
  std::size_t k = 0;
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b, ++k)
      if (u.prefers(a, b)) bits[k / 64] |= std::uint64_t{1} << (k % 64);
  return bits;
}

}  // namespace detail

inline DomainGraph build_graph(const Domain& d, std::size_t cap = kDefaultGraphCap) {
  if (d.size() > cap) throw ResourceLimitError("domain graph over " + std::to_string(d.size()) + " orders", cap);
  const std::size_t size = d.size();
  std::vector<std::vector<std::uint64_t>> bits;
  bits.reserve(size);
  for (const auto& u : d) bits.push_back(detail::pair_bits(u));
  const std::size_t words = bits.empty() ? 0 : bits.front().size();

  // v lies between u and w iff v agrees with u wherever u and w agree.
  auto between = [&](std::size_t v, std::size_t u, std::size_t w) {
    for (std::size_t k = 0; k < words; ++k)
      if ((bits[v][k] ^ bits[u][k]) & ~(bits[u][k] ^ bits[w][k])) return false;
    return true;
  };

  DomainGraph g{d, SimpleGraph(size), {}};
  for (std::size_t u = 0; u < size; ++u)
    for (std::size_t w = u + 1; w < size; ++w) {
      bool edge = true;
      for (std::size_t v = 0; v < size && edge; ++v)
        if (v != u && v != w && between(v, u, w)) edge = false;
      if (!edge) continue;
      g.graph.add_edge(u, w);
      g.permutahedron_edge.push_back(is_adjacent(d[u], d[w]));
    }
  return g;
}

/// Every edge of G_D is an edge of the permutahedron.
inline bool is_connected(const DomainGraph& g) {
  return std::all_of(g.permutahedron_edge.begin(), g.permutahedron_edge.end(), [](bool b) { return b; });
}

inline bool is_connected(const Domain& d, std::size_t cap = kDefaultGraphCap) {
  return is_connected(build_graph(d, cap));
}

/// Result of a median check; `diagnostic` explains a false verdict.
struct MedianVerdict {
  bool is_median = false;
  std::string diagnostic;

  explicit operator bool() const noexcept { return is_median; }
};

/// Every vertex triple has exactly one vertex on shortest paths between each pair.
inline MedianVerdict verify_median_graph(const SimpleGraph& g) {
  const std::size_t size = g.vertex_count();
  if (size == 0) return {true, {}};
  std::vector<std::vector<std::size_t>> dist;
  dist.reserve(size);
  for (std::size_t v = 0; v < size; ++v) {
    dist.push_back(g.distances_from(v));
    if (v == 0)
      for (std::size_t w = 0; w < size; ++w)
        if (dist[0][w] == SimpleGraph::kUnreachable)
          return {false, "graph is disconnected: vertex " + std::to_string(w) + " unreachable from 0"};
  }
  const std::size_t words = (size + 63) / 64;
  // geodesic[a * size + b]: vertices on some shortest a-b path.
  std::vector<std::vector<std::uint64_t>> geodesic(size * size, std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a; b < size; ++b) {
      auto& set = geodesic[a * size + b];
      for (std::size_t m = 0; m < size; ++m)
        if (dist[a][m] + dist[m][b] == dist[a][b]) set[m / 64] |= std::uint64_t{1} << (m % 64);
      geodesic[b * size + a] = set;
    }
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b)
      for (std::size_t c = b + 1; c < size; ++c) {
        std::size_t medians = 0;
        const auto& ab = geodesic[a * size + b];
        const auto& bc = geodesic[b * size + c];
        const auto& ac = geodesic[a * size + c];
        for (std::size_t k = 0; k < words; ++k) medians += static_cast<std::size_t>(std::popcount(ab[k] & bc[k] & ac[k]));
        if (medians != 1)
          return {false, "vertices " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                             " have " + std::to_string(medians) + " medians"};
      }
  return {true, {}};
}

inline MedianVerdict verify_median_graph(const DomainGraph& g) { return verify_median_graph(g.graph); }

/// A path from w to reverse(w) inside a domain, one neighbouring swap per step.
struct MaximalChain {
  std::vector<LinearOrder> path;
  /// The swapped pair at each step, as (ranked above in w, ranked below in w).
  std::vector<std::pair<AltId, AltId>> swaps;
};

namespace detail {

inline MaximalChain chain_from_path(std::vector<LinearOrder> path) {
  MaximalChain chain{std::move(path), {}};
  for (std::size_t s = 0; s + 1 < chain.path.size(); ++s) {
    const auto& from = chain.path[s];
    const auto& to = chain.path[s + 1];
    std::size_t r = 0;
    while (from[r] == to[r]) ++r;
    chain.swaps.emplace_back(from[r], from[r + 1]);
  }
  return chain;
}

}  // namespace detail

/// Monotone swap path inside D from w to reverse(w): each step swaps a neighbouring pair
/// still in w's relative order, so the path has exactly C(n,2) steps.
inline std::optional<MaximalChain> find_maximal_chain(const Domain& d, const LinearOrder& w) {
  if (!d.contains(w)) throw PreconditionError("chain start is not in the domain");
  const LinearOrder target = reverse(w);
  if (!d.contains(target)) return std::nullopt;

  std::set<LinearOrder> dead;
  std::vector<LinearOrder> path{w};
  auto dfs = [&](auto&& self, const LinearOrder& current) -> bool {
    if (current == target) return true;
    for (std::size_t r = 0; r + 1 < current.size(); ++r) {
      if (!w.prefers(current[r], current[r + 1])) continue;
      LinearOrder next = swap_adjacent(current, r);
      if (!d.contains(next) || dead.contains(next)) continue;
      path.push_back(next);
      if (self(self, next)) return true;
      path.pop_back();
      dead.insert(std::move(next));
    }
    return false;
  };
  if (!dfs(dfs, w)) return std::nullopt;
  return detail::chain_from_path(std::move(path));
}

/// Every maximal chain from w inside D, up to `limit` chains.
inline std::vector<MaximalChain> all_maximal_chains(const Domain& d, const LinearOrder& w,
                                                    std::size_t limit = 100000) {
  if (!d.contains(w)) throw PreconditionError("chain start is not in the domain");
  const LinearOrder target = reverse(w);
  std::vector<MaximalChain> out;
  if (!d.contains(target)) return out;
  std::vector<LinearOrder> path{w};
  auto dfs = [&](auto&& self, const LinearOrder& current) -> void {
    if (out.size() >= limit) return;
    if (current == target) {
      out.push_back(detail::chain_from_path(path));
      return;
    }
    for (std::size_t r = 0; r + 1 < current.size(); ++r) {
      if (!w.prefers(current[r], current[r + 1])) continue;
      LinearOrder next = swap_adjacent(current, r);
      if (!d.contains(next)) continue;
      path.push_back(next);
      self(self, next);
      path.pop_back();
    }
  };
  dfs(dfs, w);
  return out;
}

/// Maximal width, plus a maximal chain between some reversed pair.
inline bool is_semi_connected(const Domain& d) {
  for (const auto& u : d)
    if (d.contains(reverse(u)) && find_maximal_chain(d, u)) return true;
  return false;
}

/// [i,j,k] with i, j, k listed in the chain start's order.
struct InversionTriple {
  AltId i, j, k;

  friend bool operator==(const InversionTriple&, const InversionTriple&) = default;
  friend auto operator<=>(const InversionTriple&, const InversionTriple&) = default;
};

/// Triples i < j < k (ranked by the chain's first order) whose pairs are swapped in the
/// order (j,k), (i,k), (i,j). Sorted by the ranks of i, j, k.
inline std::vector<InversionTriple> inversion_triples(const MaximalChain& chain) {
  std::vector<InversionTriple> out;
  if (chain.path.empty()) return out;
  const LinearOrder& w = chain.path.front();
  const std::size_t n = w.size();
  if (chain.swaps.size() != choose2(n)) throw PreconditionError("not a maximal chain");
  std::map<std::pair<AltId, AltId>, std::size_t> step;
  for (std::size_t s = 0; s < chain.swaps.size(); ++s) step[chain.swaps[s]] = s;
  auto when = [&](AltId a, AltId b) { return step.at({a, b}); };
  for (std::size_t ri = 0; ri < n; ++ri)
    for (std::size_t rj = ri + 1; rj < n; ++rj)
      for (std::size_t rk = rj + 1; rk < n; ++rk) {
        const AltId i = w[ri], j = w[rj], k = w[rk];
        if (when(j, k) < when(i, k) && when(i, k) < when(i, j)) out.push_back({i, j, k});
      }
  return out;
}

}  // namespace condorcet

#endif  // CONDORCET_GRAPH_HPP
