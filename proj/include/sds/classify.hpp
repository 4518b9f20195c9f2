#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sds/common.hpp"
#include "sds/graph.hpp"
#include "sds/orientation.hpp"

namespace sds {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Renumber union-find roots to dense ids 0..k-1 in first-occurrence order.
inline std::vector<int> dense_classes(UnionFind& uf, std::size_t n, int* count) {
  std::vector<int> cls(n, -1);
  std::unordered_map<std::size_t, int> id;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    auto [it, fresh] = id.emplace(r, static_cast<int>(id.size()));
    cls[i] = it->second;
    (void)fresh;
  }
  *count = static_cast<int>(id.size());
  return cls;
}

}  // namespace detail

// The partition of Acyc(Y) into click classes (kappa) and click+reflection
// classes (delta). kappa_class always refines delta_class.
struct ClickClassification {
  Graph graph;
  std::vector<std::uint64_t> masks;  // all acyclic orientations, enumeration order
  std::vector<int> kappa_class;      // per orientation index, ids 0..kappa-1
  std::vector<int> delta_class;      // per orientation index, ids 0..delta-1
  int kappa = 0;
  int delta = 0;

  Orientation orientation(int i) const {
    return Orientation(graph, masks[static_cast<std::size_t>(i)]);
  }

  int index_of_mask(std::uint64_t mask) const {
    auto it = std::find(masks.begin(), masks.end(), mask);
    if (it == masks.end())
      throw std::invalid_argument("ClickClassification: mask is not an acyclic orientation");
    return static_cast<int>(it - masks.begin());
  }

  std::vector<int> kappa_class_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(kappa), 0);
    for (int c : kappa_class) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
  }

  std::vector<int> delta_class_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(delta), 0);
    for (int c : delta_class) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
  }
};

// Builds the click graph on Acyc(Y) (edges o <-> click(o, v) for each source
// v) and counts its components; delta additionally joins o with its full
// reversal.
inline ClickClassification classify(const Graph& y, int max_edges = default_enum_edge_cap) {
  ClickClassification out;
  out.graph = y;
  out.masks = detail::enumerate_acyclic_masks(y, max_edges);

  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(out.masks.size() * 2);
  for (std::size_t i = 0; i < out.masks.size(); ++i) index.emplace(out.masks[i], i);

  int n = y.vertex_count();
  int m = y.edge_count();
  auto incidence = y.incidence();
  std::vector<std::uint64_t> vertex_bits(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    for (int i : incidence[static_cast<std::size_t>(v)])
      vertex_bits[static_cast<std::size_t>(v)] |= 1ull << i;
  std::uint64_t all = m == 0 ? 0 : (m == 64 ? ~0ull : (1ull << m) - 1);

  detail::UnionFind kappa_uf(out.masks.size());
  detail::UnionFind delta_uf(out.masks.size());
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < out.masks.size(); ++i) {
    std::uint64_t mask = out.masks[i];
    std::fill(indeg.begin(), indeg.end(), 0);
    for (int j = 0; j < m; ++j) {
      const Edge& e = y.edges()[static_cast<std::size_t>(j)];
      int head = ((mask >> j) & 1) ? e.u : e.v;
      ++indeg[static_cast<std::size_t>(head)];
    }
    for (int v = 1; v <= n; ++v) {
      if (indeg[static_cast<std::size_t>(v)] != 0) continue;
      std::uint64_t clicked = mask ^ vertex_bits[static_cast<std::size_t>(v)];
      std::size_t j = index.at(clicked);  // clicks preserve acyclicity
      kappa_uf.unite(i, j);
      delta_uf.unite(i, j);
    }
    delta_uf.unite(i, index.at(mask ^ all));
  }

  out.kappa_class = detail::dense_classes(kappa_uf, out.masks.size(), &out.kappa);
  out.delta_class = detail::dense_classes(delta_uf, out.masks.size(), &out.delta);
  return out;
}

// All acyclic orientations whose unique source is v; there is exactly one
// per click class of a connected graph.
inline std::vector<Orientation> unique_source_representatives(
    const Graph& y, int v, int max_edges = default_enum_edge_cap) {
  y.check_vertex(v);
  if (!is_connected(y))
    throw std::invalid_argument("unique_source_representatives: graph must be connected");
  std::vector<Orientation> out;
  for (std::uint64_t mask : detail::enumerate_acyclic_masks(y, max_edges)) {
    auto indeg = detail::indegrees(y, mask);
    bool ok = true;
    for (int w = 1; w <= y.vertex_count() && ok; ++w) {
      bool src = indeg[static_cast<std::size_t>(w)] == 0;
      if (src != (w == v)) ok = false;
    }
    if (ok) out.emplace_back(y, mask);
  }
  return out;
}

namespace detail {

// Lehmer rank of a permutation given as 0-based values.
inline std::size_t perm_rank(const std::vector<int>& p) {
  std::size_t rank = 0;
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller;
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

}  // namespace detail

// Number of connected components of the permutation update graph U(Y):
// permutations adjacent when they differ by one transposition of consecutive
// entries that are non-adjacent in Y. Always equals alpha(Y).
inline std::int64_t update_graph_components(const Graph& y, int max_n = 8) {
  int n = y.vertex_count();
  if (n > max_n)
    throw cap_error("update_graph_components: n=" + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t total = static_cast<std::size_t>(factorial(n));
  detail::UnionFind uf(total);
  std::vector<int> zero_based(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i)
      zero_based[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)] - 1;
    std::size_t r = detail::perm_rank(zero_based);
    for (int k = 0; k + 1 < n; ++k) {
      if (y.has_edge(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]))
        continue;
      std::swap(zero_based[static_cast<std::size_t>(k)], zero_based[static_cast<std::size_t>(k + 1)]);
      uf.unite(r, detail::perm_rank(zero_based));
      std::swap(zero_based[static_cast<std::size_t>(k)], zero_based[static_cast<std::size_t>(k + 1)]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  int count = 0;
  detail::dense_classes(uf, total, &count);
  return count;
}

}  // namespace sds
