#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sds/common.hpp"
#include "sds/graph.hpp"
#include "sds/permutation.hpp"

namespace sds {

namespace detail {

// Backtracking search for edge-preserving bijections a -> b. Vertices of `a`
// are assigned in order 1..n; candidates are filtered by degree and by
// adjacency consistency with everything assigned so far. With find_all=false
// the search stops at the first hit.
inline void isomorphism_search(const Graph& a, const Graph& b, bool find_all,
                               std::vector<std::vector<int>>* out) {
  int n = a.vertex_count();
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  auto consistent = [&](int v, int w) {
    if (a.degree(v) != b.degree(w)) return false;
    for (int u = 1; u < v; ++u) {
      if (a.has_edge(u, v) != b.has_edge(img[static_cast<std::size_t>(u)], w)) return false;
    }
    return true;
  };

  // Invariant at loop top: vertices below v are assigned, v itself is free,
  // and cand[v] remembers the last candidate already tried for v.
  int v = 1;
  std::vector<int> cand(static_cast<std::size_t>(n) + 1, 0);
  while (v >= 1) {
    if (v > n) {
      out->emplace_back(img.begin() + 1, img.end());
      if (!find_all) return;
      --v;
      used[static_cast<std::size_t>(img[static_cast<std::size_t>(v)])] = false;
      img[static_cast<std::size_t>(v)] = 0;
      continue;
    }
    int start = cand[static_cast<std::size_t>(v)] + 1;
    int pick = 0;
    for (int w = start; w <= n; ++w) {
      if (!used[static_cast<std::size_t>(w)] && consistent(v, w)) {
        pick = w;
        break;
      }
    }
    if (pick == 0) {
      cand[static_cast<std::size_t>(v)] = 0;
      --v;
      if (v >= 1) {
        used[static_cast<std::size_t>(img[static_cast<std::size_t>(v)])] = false;
        img[static_cast<std::size_t>(v)] = 0;
      }
    } else {
      cand[static_cast<std::size_t>(v)] = pick;
      img[static_cast<std::size_t>(v)] = pick;
      used[static_cast<std::size_t>(pick)] = true;
      ++v;
    }
  }
}

}  // namespace detail

// Full automorphism group by pruned exhaustive search, identity first
// (the identity is the lexicographically least automorphism).
inline std::vector<VertexPermutation> automorphisms(const Graph& y, int max_n = 10) {
  if (y.vertex_count() > max_n)
    throw cap_error("automorphisms: n=" + std::to_string(y.vertex_count()) +
                    " exceeds cap " + std::to_string(max_n));
  std::vector<std::vector<int>> raw;
  detail::isomorphism_search(y, y, /*find_all=*/true, &raw);
  std::vector<VertexPermutation> out;
  out.reserve(raw.size());
  for (auto& img : raw) out.emplace_back(std::move(img));
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degseq = [](const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(a) != degseq(b)) return false;
  std::vector<std::vector<int>> hit;
  detail::isomorphism_search(a, b, /*find_all=*/false, &hit);
  return !hit.empty();
}

}  // namespace sds
