#include <catch2/catch_amalgamated.hpp>

#include "sds/automorphisms.hpp"
#include "sds/families.hpp"
#include "sds/phase_space.hpp"
#include "sds/random_gen.hpp"
#include "sds/rules.hpp"
#include "sds/system.hpp"

using namespace sds;

namespace {

// Independent periodic-point oracle: iterate the successor q^n times from
// every state to land on a cycle, then walk it. No coloring, no shared code
// with detail::find_cycles.
std::vector<std::uint64_t> periodic_by_iteration(const SdsSystem& sys) {
  std::uint64_t size = sys.state_count();
  std::vector<std::uint64_t> succ(size);
  std::vector<int> scratch;
  for (std::uint64_t i = 0; i < size; ++i) {
    State s = state_from_index(i, sys.graph().vertex_count(), sys.q());
    sys.apply_word_inplace(s.values, scratch);
    succ[i] = state_index(s.values, sys.q());
  }
  std::vector<bool> periodic(size, false);
  for (std::uint64_t i = 0; i < size; ++i) {
    std::uint64_t cur = i;
    for (std::uint64_t k = 0; k < size; ++k) cur = succ[cur];
    std::uint64_t x = cur;
    do {
      periodic[x] = true;
      x = succ[x];
    } while (x != cur);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < size; ++i)
    if (periodic[i]) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("builtin rules") {
  RuleTable nor3 = builtin_rule("nor", 3, 2);
  CHECK(nor3.eval(std::vector<int>{0, 0, 0}) == 1);
  CHECK(nor3.eval(std::vector<int>{0, 1, 0}) == 0);
  CHECK(nor3.eval(std::vector<int>{1, 1, 1}) == 0);

  RuleTable par3 = builtin_rule("parity", 3, 2);
  CHECK(par3.eval(std::vector<int>{1, 1, 0}) == 0);
  CHECK(par3.eval(std::vector<int>{1, 0, 0}) == 1);

  RuleTable par1 = builtin_rule("parity", 1, 2);
  CHECK(par1.eval(std::vector<int>{0}) == 0);  // arity-1 parity is the identity
  CHECK(par1.eval(std::vector<int>{1}) == 1);

  RuleTable nand2 = builtin_rule("nand", 2, 2);
  CHECK(nand2.eval(std::vector<int>{1, 1}) == 0);
  CHECK(nand2.eval(std::vector<int>{0, 1}) == 1);

  RuleTable maj3 = builtin_rule("majority", 3, 2);
  CHECK(maj3.eval(std::vector<int>{1, 1, 0}) == 1);
  CHECK(maj3.eval(std::vector<int>{1, 0, 0}) == 0);

  CHECK(builtin_rule("zero", 2, 3).eval(std::vector<int>{2, 2}) == 0);
  CHECK(builtin_rule("one", 2, 3).eval(std::vector<int>{2, 0}) == 1);

  CHECK_THROWS_AS(builtin_rule("nor", 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(builtin_rule("frobnicate", 2, 2), std::invalid_argument);
}

TEST_CASE("rule table validation") {
  CHECK_THROWS_AS(RuleTable(2, 2, {0, 1, 1}), std::invalid_argument);     // wrong size
  CHECK_THROWS_AS(RuleTable(2, 2, {0, 1, 2, 0}), std::invalid_argument);  // value >= q
  RuleTable t(2, 3, {0, 1, 2, 0, 1, 2, 0, 1, 2});
  // lexicographic input order, first element most significant
  CHECK(t.eval(std::vector<int>{1, 2}) == 2);
  CHECK(t.eval(std::vector<int>{2, 1}) == 1);
}

TEST_CASE("state indexing is mixed radix, vertex 1 least significant") {
  State s = state_from_values({1, 0, 1, 0}, 2);
  CHECK(s.index == 5);
  CHECK(state_from_index(5, 4, 2).values == std::vector<int>({1, 0, 1, 0}));
  State t = state_from_values({2, 1}, 3);
  CHECK(t.index == 2 + 1 * 3);
  CHECK_THROWS_AS(state_from_values({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(state_from_index(16, 4, 2), std::invalid_argument);

  for (std::uint64_t i = 0; i < 27; ++i)
    CHECK(state_from_index(i, 3, 3).index == i);
}

TEST_CASE("system validation") {
  Graph c4 = circle_graph(4);
  std::vector<RuleTable> rules(4, builtin_rule("nor", 3, 2));
  CHECK_NOTHROW(SdsSystem(c4, 2, rules, {1, 2, 3, 4}));
  CHECK_THROWS_AS(SdsSystem(c4, 2, rules, {1, 2, 5}), std::invalid_argument);  // bad word
  std::vector<RuleTable> bad(4, builtin_rule("nor", 2, 2));
  CHECK_THROWS_AS(SdsSystem(c4, 2, bad, {1}), std::invalid_argument);  // arity mismatch
  std::vector<RuleTable> three(3, builtin_rule("nor", 3, 2));
  CHECK_THROWS_AS(SdsSystem(c4, 2, three, {1}), std::invalid_argument);  // count mismatch
}

TEST_CASE("apply_local") {
  auto sys = make_system(circle_graph(4), 2, "nor", {1, 2, 3, 4});
  State zero = state_from_values({0, 0, 0, 0}, 2);
  CHECK(apply_local(sys, 1, zero).values == std::vector<int>({1, 0, 0, 0}));
  State s = state_from_values({0, 1, 0, 0}, 2);
  CHECK(apply_local(sys, 1, s).values == std::vector<int>({0, 1, 0, 0}));

  SECTION("frame property: only coordinate v changes") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
      int n = uniform_int(rng, 2, 5);
      Graph y = random_graph(n, n * (n - 1) / 2, rng);
      int q = uniform_int(rng, 2, 3);
      SdsSystem rsys = random_system(y, q, {1}, rng);
      State st = state_from_index(rng() % rsys.state_count(), n, q);
      int v = uniform_int(rng, 1, n);
      State out = apply_local(rsys, v, st);
      for (int w = 1; w <= n; ++w)
        if (w != v)
          CHECK(out.values[static_cast<std::size_t>(w - 1)] ==
                st.values[static_cast<std::size_t>(w - 1)]);
    }
  }
}

TEST_CASE("apply_sds and apply_parallel") {
  auto sys = make_system(circle_graph(4), 2, "nor", {1, 2, 3, 4});
  State zero = state_from_values({0, 0, 0, 0}, 2);
  CHECK(apply_sds(sys, zero).values == std::vector<int>({1, 0, 1, 0}));
  CHECK(apply_parallel(sys, zero).values == std::vector<int>({1, 1, 1, 1}));

  SECTION("empty word is the identity") {
    auto idsys = make_system(circle_graph(4), 2, "nor", {});
    for (std::uint64_t i = 0; i < 16; ++i) {
      State s = state_from_index(i, 4, 2);
      CHECK(apply_sds(idsys, s) == s);
    }
  }

  SECTION("word (1,1) applies F_1 twice") {
    auto rep = make_system(circle_graph(4), 2, "nor", {1, 1});
    for (std::uint64_t i = 0; i < 16; ++i) {
      State s = state_from_index(i, 4, 2);
      CHECK(apply_sds(rep, s) == apply_local(rep, 1, apply_local(rep, 1, s)));
    }
  }

  SECTION("no coupling on the edgeless graph: sequential parity = parallel parity") {
    Graph e4 = empty_graph(4);
    auto p = make_system(e4, 2, "parity", {3, 1, 4, 2});
    for (std::uint64_t i = 0; i < 16; ++i) {
      State s = state_from_index(i, 4, 2);
      CHECK(apply_sds(p, s) == apply_parallel(p, s));
    }
  }

  SECTION("constant rules map everything to the constant tuple") {
    auto z = make_system(circle_graph(4), 2, "one", {1, 2, 3, 4});
    for (std::uint64_t i = 0; i < 16; ++i) {
      State s = state_from_index(i, 4, 2);
      CHECK(apply_sds(z, s).values == std::vector<int>({1, 1, 1, 1}));
      CHECK(apply_parallel(z, s).values == std::vector<int>({1, 1, 1, 1}));
    }
  }
}

TEST_CASE("word operations") {
  std::vector<int> w{1, 2, 3, 4};
  CHECK(shift_word(w, 1) == std::vector<int>({2, 3, 4, 1}));
  CHECK(shift_word(w, 4) == w);  // full rotation is the identity
  CHECK(shift_word(w, 0) == w);
  CHECK(reflect_word(w) == std::vector<int>({4, 3, 2, 1}));
  VertexPermutation g({2, 3, 4, 1});
  CHECK(permute_word(g, w) == std::vector<int>({2, 3, 4, 1}));
  CHECK(permute_word(g, {1, 1, 3}) == std::vector<int>({2, 2, 4}));
  CHECK_THROWS_AS(shift_word(w, -1), std::invalid_argument);
}

TEST_CASE("phase space of the worked circle example") {
  Graph c4 = circle_graph(4);
  auto ps = phase_space(make_system(c4, 2, "nor", {1, 2, 3, 4}));
  CHECK(ps.size == 16);
  // single 7-cycle: 0000 -> 1010 -> 0001 -> 0100 -> 0010 -> 1000 -> 0101 -> 0000
  CHECK(cycle_multiset(ps) == std::vector<std::uint64_t>{7});
  CHECK(ps.successor[0] == 5);  // (0,0,0,0) -> (1,0,1,0)

  auto ps14 = phase_space(make_system(c4, 2, "nor", {1, 4, 2, 3}));
  auto ps13 = phase_space(make_system(c4, 2, "nor", {1, 3, 2, 4}));
  CHECK(cycle_multiset(ps14) == std::vector<std::uint64_t>({2, 2, 3}));
  CHECK(cycle_multiset(ps13) == std::vector<std::uint64_t>({2, 2, 3}));
}

TEST_CASE("phase space cycles match the iteration oracle") {
  Rng rng(17);
  for (int it = 0; it < 30; ++it) {
    int n = uniform_int(rng, 2, 4);
    int q = uniform_int(rng, 2, 3);
    Graph y = random_graph(n, n * (n - 1) / 2, rng);
    SdsSystem sys = random_system(y, q, random_word(n, 6, rng), rng);
    auto ps = phase_space(sys);
    CHECK(ps.periodic == periodic_by_iteration(sys));
  }
}

TEST_CASE("phase space on stars and invertible systems") {
  // one 3-cycle and 2^{n-1}-1 two-cycles for nor on the star
  auto star = phase_space(make_system(star_graph(3), 2, "nor", {1, 2, 3, 4}));
  CHECK(cycle_multiset(star) == std::vector<std::uint64_t>({2, 2, 2, 3}));

  // parity systems are invertible: every state is periodic
  auto par = phase_space(make_system(path_graph(3), 2, "parity", {1, 2, 3}));
  CHECK(par.periodic.size() == 8);

  // hand-enumerated: parity on the 2-path, word (1,2): fixed point (0,0) and
  // 3-cycle (0,1) -> (1,0) -> (1,1) -> (0,1)
  auto p2 = phase_space(make_system(path_graph(2), 2, "parity", {1, 2}));
  CHECK(cycle_multiset(p2) == std::vector<std::uint64_t>({1, 3}));

  // constant rules: exactly one fixed point
  auto cz = phase_space(make_system(circle_graph(4), 2, "zero", {1, 2, 3, 4}));
  CHECK(cycle_multiset(cz) == std::vector<std::uint64_t>{1});
}

TEST_CASE("phase space cap") {
  auto sys = make_system(circle_graph(4), 2, "nor", {1, 2, 3, 4});
  CHECK_THROWS_AS(phase_space(sys, 8), cap_error);
}

TEST_CASE("periodic restriction is a bijection on periodic points") {
  auto ps = phase_space(make_system(circle_graph(5), 2, "nor", {1, 2, 3, 4, 5}));
  auto restr = periodic_restriction(ps);
  CHECK(restr.size() == ps.periodic.size());
  std::vector<std::uint64_t> images;
  for (auto [from, to] : restr) {
    CHECK(ps.is_periodic(from));
    CHECK(ps.is_periodic(to));
    images.push_back(to);
  }
  std::sort(images.begin(), images.end());
  CHECK(images == ps.periodic);
}

TEST_CASE("equivalence verdicts") {
  Graph c4 = circle_graph(4);
  auto w1234 = make_system(c4, 2, "nor", {1, 2, 3, 4});
  auto w1423 = make_system(c4, 2, "nor", {1, 4, 2, 3});
  auto w1324 = make_system(c4, 2, "nor", {1, 3, 2, 4});

  CHECK(cycle_equivalent(phase_space(w1423), phase_space(w1324)));
  CHECK_FALSE(cycle_equivalent(phase_space(w1234), phase_space(w1324)));
  CHECK(cycle_equivalent(phase_space(w1234), phase_space(w1234)));

  // {1,3} is a non-edge of Circ_4: transposing adjacent entries 1,3 keeps
  // the map identical
  auto a = make_system(c4, 2, "nor", {1, 3, 2, 4});
  auto b = make_system(c4, 2, "nor", {3, 1, 2, 4});
  CHECK(functionally_equivalent(a, b));
  CHECK(functionally_cycle_equivalent(a, b));

  CHECK_FALSE(functionally_equivalent(w1234, w1324));
  CHECK_FALSE(functionally_cycle_equivalent(w1234, w1324));

  // both maps agree at state 0 even though they differ as functions
  CHECK(apply_sds(w1234, state_from_index(0, 4, 2)) ==
        apply_sds(w1324, state_from_index(0, 4, 2)));

  auto other_graph = make_system(path_graph(4), 2, "nor", {1, 2, 3, 4});
  CHECK_THROWS_AS(functionally_equivalent(w1234, other_graph), std::invalid_argument);
  Rng qrng(1);
  std::vector<RuleTable> q3rules;
  for (int v = 1; v <= 4; ++v) q3rules.push_back(random_rule_table(3, 3, qrng));
  SdsSystem q3(c4, 3, q3rules, {1, 2, 3, 4});
  CHECK_THROWS_AS(functionally_equivalent(w1234, q3), std::invalid_argument);
}

TEST_CASE("shift of the word is functionally cycle equivalent on stars") {
  // sanity for the cycle/functional-cycle distinction: shifting a word gives
  // cycle equivalence but not necessarily equal maps
  auto s1 = make_system(star_graph(3), 2, "nor", {1, 2, 3, 4});
  auto s2 = s1.with_word(shift_word({1, 2, 3, 4}, 1));
  CHECK(cycle_equivalent(phase_space(s1), phase_space(s2)));
}

TEST_CASE("hand-computed 2-vertex system where reflection is not an inverse") {
  // f1(y1,y2) = (1+y1)y2, f2 = nor2, word (1,2). Successor tables fixed by
  // hand enumeration; the reflected word does not invert the map on Per.
  Graph k2 = make_graph(2, {{1, 2}});
  std::vector<RuleTable> rules{RuleTable(2, 2, {0, 1, 0, 0}), RuleTable(2, 2, {1, 0, 0, 0})};
  SdsSystem fwd(k2, 2, rules, {1, 2});
  SdsSystem bwd(k2, 2, rules, {2, 1});
  auto pf = phase_space(fwd);
  auto pb = phase_space(bwd);
  // states indexed y1 + 2*y2: 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1)
  CHECK(pf.successor == std::vector<std::uint64_t>({2, 2, 1, 0}));
  CHECK(pb.successor == std::vector<std::uint64_t>({3, 0, 0, 0}));
  CHECK(pf.periodic == std::vector<std::uint64_t>({1, 2}));
  CHECK(pb.periodic == std::vector<std::uint64_t>({0, 3}));
  // cycle equivalent (one 2-cycle each) yet not inverse to each other on Per
  CHECK(cycle_equivalent(pf, pb));
  CHECK(pb.successor[pf.successor[1]] != 1);
}

TEST_CASE("aut-invariance predicate on rule tables") {
  Graph c4 = circle_graph(4);
  auto autos = automorphisms(c4);
  CHECK(rules_aut_invariant(make_system(c4, 2, "nor", {1, 2, 3, 4}), autos));
  CHECK(rules_aut_invariant(make_system(c4, 2, "parity", {1, 2, 3, 4}), autos));

  // projection onto the first neighborhood slot is not Aut-invariant
  std::vector<RuleTable> proj(4, RuleTable(3, 2, {0, 0, 0, 0, 1, 1, 1, 1}));
  CHECK_FALSE(rules_aut_invariant(SdsSystem(c4, 2, proj, {1, 2, 3, 4}), autos));
}
