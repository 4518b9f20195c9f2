#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sds/common.hpp"
#include "sds/system.hpp"

namespace sds {

inline constexpr std::uint64_t default_state_cap = std::uint64_t{1} << 24;

// Functional digraph of an SDS map over the full state space: a total
// successor table plus the periodic points grouped into their cycles.
struct PhaseSpace {
  int n = 0;
  int q = 0;
  std::uint64_t size = 0;
  std::vector<std::uint64_t> successor;            // successor[i] = image of state i
  std::vector<std::uint64_t> periodic;             // sorted indices lying on cycles
  std::vector<std::vector<std::uint64_t>> cycles;  // each cycle in traversal order

  bool is_periodic(std::uint64_t idx) const {
    return std::binary_search(periodic.begin(), periodic.end(), idx);
  }
};

namespace detail {

// Cycle extraction by path-following with three colors: unvisited, on the
// current path, finished. Linear in the number of states, no recursion.
inline void find_cycles(PhaseSpace& ps) {
  std::vector<std::uint8_t> color(ps.size, 0);
  std::vector<std::uint64_t> path;
  for (std::uint64_t s = 0; s < ps.size; ++s) {
    if (color[s] != 0) continue;
    path.clear();
    std::uint64_t cur = s;
    while (color[cur] == 0) {
      color[cur] = 1;
      path.push_back(cur);
      cur = ps.successor[cur];
    }
    if (color[cur] == 1) {  // closed a new cycle inside the current path
      auto it = std::find(path.begin(), path.end(), cur);
      ps.cycles.emplace_back(it, path.end());
    }
    for (std::uint64_t v : path) color[v] = 2;
  }
  for (const auto& cyc : ps.cycles)
    ps.periodic.insert(ps.periodic.end(), cyc.begin(), cyc.end());
  std::sort(ps.periodic.begin(), ps.periodic.end());
}

}  // namespace detail

inline PhaseSpace phase_space(const SdsSystem& sys,
                              std::uint64_t max_states = default_state_cap) {
  PhaseSpace ps;
  ps.n = sys.graph().vertex_count();
  ps.q = sys.q();
  ps.size = sys.state_count();
  if (ps.size > max_states)
    throw cap_error("phase_space: q^n = " + std::to_string(ps.size) + " exceeds cap " +
                    std::to_string(max_states));
  ps.successor.resize(ps.size);
  std::vector<int> values(static_cast<std::size_t>(ps.n), 0);
  std::vector<int> scratch;
  for (std::uint64_t idx = 0; idx < ps.size; ++idx) {
    std::uint64_t rest = idx;
    for (int v = 0; v < ps.n; ++v) {
      values[static_cast<std::size_t>(v)] =
          static_cast<int>(rest % static_cast<std::uint64_t>(ps.q));
      rest /= static_cast<std::uint64_t>(ps.q);
    }
    sys.apply_word_inplace(values, scratch);
    ps.successor[idx] = state_index(values, ps.q);
  }
  detail::find_cycles(ps);
  return ps;
}

// Cycle lengths in ascending order (with multiplicity).
inline std::vector<std::uint64_t> cycle_multiset(const PhaseSpace& ps) {
  std::vector<std::uint64_t> lengths;
  lengths.reserve(ps.cycles.size());
  for (const auto& cyc : ps.cycles) lengths.push_back(cyc.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

// The bijective restriction of the successor map to the periodic points,
// as (state, image) pairs sorted by state.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> periodic_restriction(
    const PhaseSpace& ps) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(ps.periodic.size());
  for (std::uint64_t idx : ps.periodic) out.emplace_back(idx, ps.successor[idx]);
  return out;
}

// The periodic part of a functional digraph is a disjoint union of directed
// cycles, so isomorphism of periodic orbits is exactly equality of the
// cycle-length multisets.
inline bool cycle_equivalent(const PhaseSpace& a, const PhaseSpace& b) {
  return cycle_multiset(a) == cycle_multiset(b);
}

namespace detail {

inline void check_comparable(const SdsSystem& a, const SdsSystem& b) {
  if (!(a.graph() == b.graph()) || a.q() != b.q())
    throw std::invalid_argument("systems are not comparable: graph or q differs");
}

}  // namespace detail

// Pointwise equality of the two SDS maps.
inline bool functionally_equivalent(const SdsSystem& a, const SdsSystem& b,
                                    std::uint64_t max_states = default_state_cap) {
  detail::check_comparable(a, b);
  std::uint64_t size = a.state_count();
  if (size > max_states)
    throw cap_error("functionally_equivalent: q^n exceeds cap");
  int n = a.graph().vertex_count();
  int q = a.q();
  std::vector<int> va(static_cast<std::size_t>(n)), vb;
  std::vector<int> scratch;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (int v = 0; v < n; ++v) {
      va[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    vb = va;
    a.apply_word_inplace(va, scratch);
    b.apply_word_inplace(vb, scratch);
    if (va != vb) return false;
  }
  return true;
}

// Equal periodic points and equal restricted maps.
inline bool functionally_cycle_equivalent(const SdsSystem& a, const SdsSystem& b,
                                          std::uint64_t max_states = default_state_cap) {
  detail::check_comparable(a, b);
  PhaseSpace pa = phase_space(a, max_states);
  PhaseSpace pb = phase_space(b, max_states);
  if (pa.periodic != pb.periodic) return false;
  for (std::uint64_t idx : pa.periodic)
    if (pa.successor[idx] != pb.successor[idx]) return false;
  return true;
}

}  // namespace sds
