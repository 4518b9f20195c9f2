#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "sds/common.hpp"

namespace sds {

// Undirected edge stored canonically with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on vertices 1..n. Immutable after
// construction; the edge list is sorted and deduplicated, so equal graphs
// compare equal with operator==.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: vertex count must be nonnegative");
    for (const Edge& e : edges) {
      if (e.u == e.v)
        throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
      if (e.u < 1 || e.v > n)
        throw std::invalid_argument("Graph: edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} out of range 1.." +
                                    std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const Edge& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool valid_vertex(int v) const { return v >= 1 && v <= n_; }

  void check_vertex(int v) const {
    if (!valid_vertex(v))
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n_));
  }

  bool has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  // Index of an edge in the canonical (sorted) edge order; -1 if absent.
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // B_1(v): neighbors of v plus v itself, in increasing vertex order.
  std::vector<int> closed_neighborhood(int v) const {
    const auto& nb = neighbors(v);
    std::vector<int> out;
    out.reserve(nb.size() + 1);
    bool placed = false;
    for (int w : nb) {
      if (!placed && v < w) {
        out.push_back(v);
        placed = true;
      }
      out.push_back(w);
    }
    if (!placed) out.push_back(v);
    return out;
  }

  // Edge indices incident to each vertex, indexable by vertex label.
  std::vector<std::vector<int>> incidence() const {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_) + 1);
    for (int i = 0; i < edge_count(); ++i) {
      inc[static_cast<std::size_t>(edges_[static_cast<std::size_t>(i)].u)].push_back(i);
      inc[static_cast<std::size_t>(edges_[static_cast<std::size_t>(i)].v)].push_back(i);
    }
    return inc;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

inline Graph delete_edge(const Graph& y, const Edge& e) {
  if (y.edge_index(e) < 0)
    throw std::invalid_argument("delete_edge: {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} is not an edge");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(y.edge_count()) - 1);
  for (const Edge& f : y.edges())
    if (f != e) edges.push_back(f);
  return Graph(y.vertex_count(), std::move(edges));
}

// Contract e = {u,v}: merge v into u (u < v), relabel vertices above v down
// by one, drop the loop, collapse parallel edges. Result lives on 1..n-1.
inline Graph contract_edge(const Graph& y, const Edge& e) {
  if (y.edge_index(e) < 0)
    throw std::invalid_argument("contract_edge: {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} is not an edge");
  auto relabel = [&](int w) {
    if (w == e.v) w = e.u;
    return w > e.v ? w - 1 : w;
  };
  std::vector<Edge> edges;
  for (const Edge& f : y.edges()) {
    int a = relabel(f.u), b = relabel(f.v);
    if (a != b) edges.emplace_back(a, b);
  }
  return Graph(y.vertex_count() - 1, std::move(edges));
}

// Y plus one new vertex n+1 adjacent to every existing vertex.
inline Graph vertex_join(const Graph& y) {
  int n = y.vertex_count();
  std::vector<Edge> edges = y.edges();
  for (int v = 1; v <= n; ++v) edges.emplace_back(v, n + 1);
  return Graph(n + 1, std::move(edges));
}

inline std::vector<std::vector<int>> connected_components(const Graph& y) {
  int n = y.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : y.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Bridges via iterative DFS lowlinks. Simple graph, so any tree edge with
// low[child] > disc[parent] is a bridge.
inline std::vector<Edge> bridges(const Graph& y) {
  int n = y.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Edge> out;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  for (int s = 1; s <= n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Frame> stack{{s, 0, 0}};
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& nb = y.neighbors(fr.v);
      if (fr.next < nb.size()) {
        int w = nb[fr.next++];
        if (w == fr.parent) continue;
        if (disc[static_cast<std::size_t>(w)] != -1) {
          low[static_cast<std::size_t>(fr.v)] =
              std::min(low[static_cast<std::size_t>(fr.v)], disc[static_cast<std::size_t>(w)]);
        } else {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, fr.v, 0});
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(fr.v)]);
          if (low[static_cast<std::size_t>(fr.v)] > disc[static_cast<std::size_t>(p)])
            out.emplace_back(p, fr.v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Complement of bridges(y) within edges(y).
inline std::vector<Edge> cycle_edges(const Graph& y) {
  std::vector<Edge> br = bridges(y);
  std::vector<Edge> out;
  std::set_difference(y.edges().begin(), y.edges().end(), br.begin(), br.end(),
                      std::back_inserter(out));
  return out;
}

// Proper 2-coloring (values 0/1, index = vertex) if one exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& y) {
  int n = y.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  for (int s = 1; s <= n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : y.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  color.erase(color.begin());  // drop unused slot 0
  return color;
}

inline bool is_bipartite(const Graph& y) { return two_coloring(y).has_value(); }

inline bool is_connected(const Graph& y) {
  return y.vertex_count() <= 1 || connected_components(y).size() == 1;
}

// Subgraph induced by `verts` (sorted ascending), relabeled to 1..k in order.
inline Graph induced_subgraph(const Graph& y, const std::vector<int>& verts) {
  std::vector<int> label(static_cast<std::size_t>(y.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    label[static_cast<std::size_t>(verts[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (const Edge& e : y.edges()) {
    int a = label[static_cast<std::size_t>(e.u)], b = label[static_cast<std::size_t>(e.v)];
    if (a && b) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(verts.size()), std::move(edges));
}

}  // namespace sds
