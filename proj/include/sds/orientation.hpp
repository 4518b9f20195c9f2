#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sds/automorphisms.hpp"
#include "sds/common.hpp"
#include "sds/graph.hpp"
#include "sds/permutation.hpp"

namespace sds {

// An assignment of a direction to every edge of a graph, stored as a bitmask
// over the canonical edge order: bit i clear means edge i runs low -> high,
// bit i set means high -> low.
class Orientation {
 public:
  Orientation(Graph g, std::uint64_t mask) : graph_(std::move(g)), mask_(mask) {
    if (graph_.edge_count() > 64)
      throw cap_error("Orientation: more than 64 edges");
    if (graph_.edge_count() < 64 && (mask >> graph_.edge_count()) != 0)
      throw std::invalid_argument("Orientation: mask has bits beyond the edge count");
  }

  const Graph& graph() const { return graph_; }
  std::uint64_t mask() const { return mask_; }

  bool edge_reversed(int i) const { return (mask_ >> i) & 1; }

  // (tail, head) of the directed copy of e.
  std::pair<int, int> direction(const Edge& e) const {
    int i = graph_.edge_index(e);
    if (i < 0)
      throw std::invalid_argument("Orientation::direction: {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} is not an edge");
    return edge_reversed(i) ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
  }

  bool operator==(const Orientation& o) const {
    return graph_ == o.graph_ && mask_ == o.mask_;
  }

 private:
  Graph graph_;
  std::uint64_t mask_ = 0;
};

namespace detail {

inline std::vector<int> indegrees(const Graph& g, std::uint64_t mask) {
  std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    int head = ((mask >> i) & 1) ? e.u : e.v;
    ++indeg[static_cast<std::size_t>(head)];
  }
  return indeg;
}

inline std::vector<std::vector<int>> out_adjacency(const Graph& g, std::uint64_t mask) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if ((mask >> i) & 1)
      out[static_cast<std::size_t>(e.v)].push_back(e.u);
    else
      out[static_cast<std::size_t>(e.u)].push_back(e.v);
  }
  return out;
}

// Kahn peel: true iff the directed graph given by (g, mask) has no cycle.
inline bool mask_is_acyclic(const Graph& g, std::uint64_t mask) {
  int n = g.vertex_count();
  auto indeg = indegrees(g, mask);
  auto out = out_adjacency(g, mask);
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : out[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
  }
  return seen == n;
}

// Enumerates acyclic orientation masks by fixing edge directions one at a
// time and pruning any arc that would close a directed cycle, so the work is
// proportional to the number of acyclic partial orientations rather than 2^m.
inline std::vector<std::uint64_t> enumerate_acyclic_masks(const Graph& g, int max_edges) {
  int m = g.edge_count();
  if (m > max_edges)
    throw cap_error("enumerate_acyclic: m=" + std::to_string(m) + " exceeds cap " +
                    std::to_string(max_edges));
  int n = g.vertex_count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1);
  std::vector<std::uint64_t> result;
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);

  // DFS from `from`: is `target` reachable via current arcs?
  auto reaches = [&](int from, int target) {
    std::fill(visited.begin(), visited.end(), 0);
    std::vector<int> stack{from};
    visited[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == target) return true;
      for (int w : out[static_cast<std::size_t>(v)]) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  std::uint64_t mask = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      result.push_back(mask);
      return;
    }
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    // u -> v unless v already reaches u
    if (!reaches(e.v, e.u)) {
      out[static_cast<std::size_t>(e.u)].push_back(e.v);
      self(self, i + 1);
      out[static_cast<std::size_t>(e.u)].pop_back();
    }
    // v -> u unless u already reaches v
    if (!reaches(e.u, e.v)) {
      out[static_cast<std::size_t>(e.v)].push_back(e.u);
      mask |= 1ull << i;
      self(self, i + 1);
      mask &= ~(1ull << i);
      out[static_cast<std::size_t>(e.v)].pop_back();
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace detail

inline bool is_acyclic(const Orientation& o) {
  return detail::mask_is_acyclic(o.graph(), o.mask());
}

inline constexpr int default_enum_edge_cap = 28;

inline std::vector<Orientation> enumerate_acyclic(const Graph& y,
                                                  int max_edges = default_enum_edge_cap) {
  std::vector<Orientation> out;
  for (std::uint64_t mask : detail::enumerate_acyclic_masks(y, max_edges))
    out.emplace_back(y, mask);
  return out;
}

// Orientation induced by a permutation update order: {u,v} points u -> v
// exactly when u occurs before v.
inline Orientation orientation_of_permutation(const Graph& y, const std::vector<int>& pi) {
  if (!is_permutation_word(pi, y.vertex_count()))
    throw std::invalid_argument("orientation_of_permutation: not a permutation of 1.." +
                                std::to_string(y.vertex_count()));
  std::vector<int> pos(static_cast<std::size_t>(y.vertex_count()) + 1, 0);
  for (int k = 0; k < static_cast<int>(pi.size()); ++k)
    pos[static_cast<std::size_t>(pi[static_cast<std::size_t>(k)])] = k;
  std::uint64_t mask = 0;
  for (int i = 0; i < y.edge_count(); ++i) {
    const Edge& e = y.edges()[static_cast<std::size_t>(i)];
    if (pos[static_cast<std::size_t>(e.u)] > pos[static_cast<std::size_t>(e.v)])
      mask |= 1ull << i;
  }
  return Orientation(y, mask);
}

// Topological order with smallest-available-vertex tie-break; inverts
// orientation_of_permutation on acyclic orientations.
inline std::vector<int> linear_extension(const Orientation& o) {
  const Graph& g = o.graph();
  int n = g.vertex_count();
  auto indeg = detail::indegrees(g, o.mask());
  auto out = detail::out_adjacency(g, o.mask());
  std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n; ++v) {
      if (!placed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == 0)
      throw std::invalid_argument("linear_extension: orientation contains a directed cycle");
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int w : out[static_cast<std::size_t>(pick)]) --indeg[static_cast<std::size_t>(w)];
  }
  return order;
}

inline std::vector<int> sources(const Orientation& o) {
  auto indeg = detail::indegrees(o.graph(), o.mask());
  std::vector<int> out;
  for (int v = 1; v <= o.graph().vertex_count(); ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) out.push_back(v);
  return out;
}

// Source-to-sink move: reverse every edge at a source v.
inline Orientation click(const Orientation& o, int v) {
  const Graph& g = o.graph();
  g.check_vertex(v);
  auto indeg = detail::indegrees(g, o.mask());
  if (indeg[static_cast<std::size_t>(v)] != 0)
    throw std::invalid_argument("click: vertex " + std::to_string(v) + " is not a source");
  std::uint64_t mask = o.mask();
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if (e.u == v || e.v == v) mask ^= 1ull << i;
  }
  return Orientation(g, mask);
}

// Flip every edge. Acyclic iff the input is acyclic.
inline Orientation reverse(const Orientation& o) {
  int m = o.graph().edge_count();
  std::uint64_t all = m == 64 ? ~0ull : (1ull << m) - 1;
  return Orientation(o.graph(), o.mask() ^ all);
}

namespace detail {

// Invariant key + isomorphism-checked buckets; conflates nothing, only
// speeds up repeated subproblems inside deletion-contraction recursions.
class GraphMemo {
 public:
  const std::int64_t* find(const Graph& g) const {
    auto it = buckets_.find(key(g));
    if (it == buckets_.end()) return nullptr;
    for (const auto& [stored, value] : it->second)
      if (stored == g || isomorphic(stored, g)) return &value;
    return nullptr;
  }

  void store(const Graph& g, std::int64_t value) {
    buckets_[key(g)].emplace_back(g, value);
  }

 private:
  static std::string key(const Graph& g) {
    std::vector<int> deg;
    deg.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    std::vector<std::pair<int, int>> edge_degs;
    edge_degs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
      int a = g.degree(e.u), b = g.degree(e.v);
      edge_degs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edge_degs.begin(), edge_degs.end());
    std::string k = std::to_string(g.vertex_count()) + ";" + std::to_string(g.edge_count()) + ";";
    for (int d : deg) k += std::to_string(d) + ",";
    k += ";";
    for (auto [a, b] : edge_degs) k += std::to_string(a) + "-" + std::to_string(b) + ",";
    return k;
  }

  std::unordered_map<std::string, std::vector<std::pair<Graph, std::int64_t>>> buckets_;
};

}  // namespace detail

// Counts acyclic orientations by deletion-contraction with memoization on
// isomorphism classes; usable past the enumeration cap.
inline std::int64_t alpha_recursive(const Graph& y) {
  detail::GraphMemo memo;
  auto rec = [&](auto&& self, const Graph& g) -> std::int64_t {
    if (g.edge_count() == 0) return 1;
    auto comps = connected_components(g);
    if (comps.size() > 1) {
      std::int64_t prod = 1;
      for (const auto& comp : comps)
        if (comp.size() > 1) prod *= self(self, induced_subgraph(g, comp));
      return prod;
    }
    if (const std::int64_t* hit = memo.find(g)) return *hit;
    const Edge e = g.edges().front();
    std::int64_t val = self(self, delete_edge(g, e)) + self(self, contract_edge(g, e));
    memo.store(g, val);
    return val;
  };
  return rec(rec, y);
}

// Number of acyclic orientations. Enumerates when the graph is small enough,
// otherwise falls back to the deletion-contraction count.
inline std::int64_t alpha(const Graph& y, int max_edges = default_enum_edge_cap) {
  if (y.edge_count() <= max_edges)
    return static_cast<std::int64_t>(detail::enumerate_acyclic_masks(y, max_edges).size());
  return alpha_recursive(y);
}

}  // namespace sds
