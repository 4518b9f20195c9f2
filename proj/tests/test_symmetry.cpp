#include <catch2/catch_amalgamated.hpp>

#include "sds/families.hpp"
#include "sds/phase_space.hpp"
#include "sds/random_gen.hpp"
#include "sds/symmetry.hpp"

using namespace sds;

TEST_CASE("orbit graphs") {
  Graph c4 = circle_graph(4);

  SECTION("identity quotient is the graph itself") {
    OrbitGraph og = orbit_graph(c4, VertexPermutation::identity(4));
    CHECK(og.quotient == c4);
    for (bool l : og.loop) CHECK_FALSE(l);
    CHECK(orbit_graph_alpha(og) == 14);
  }

  SECTION("full rotation collapses to a looped point") {
    OrbitGraph og = orbit_graph(c4, VertexPermutation({2, 3, 4, 1}));
    CHECK(og.orbits.size() == 1);
    CHECK(og.loop[0]);
    CHECK(orbit_graph_alpha(og) == 0);
  }

  SECTION("half turn gives a single edge") {
    OrbitGraph og = orbit_graph(c4, VertexPermutation({3, 4, 1, 2}));
    CHECK(og.orbits.size() == 2);
    CHECK(og.quotient == make_graph(2, {{1, 2}}));
    CHECK_FALSE(og.loop[0]);
    CHECK_FALSE(og.loop[1]);
    CHECK(orbit_graph_alpha(og) == 2);
  }
}

TEST_CASE("acting on orientations") {
  Graph c4 = circle_graph(4);
  VertexPermutation rot({2, 3, 4, 1});
  Orientation o = orientation_of_permutation(c4, {1, 2, 3, 4});
  Orientation img = act(rot, o);
  CHECK(img == orientation_of_permutation(c4, permute_word(rot, {1, 2, 3, 4})));
  CHECK_THROWS_AS(act(VertexPermutation({2, 1, 3, 4}), o), std::invalid_argument);  // not an automorphism

  SECTION("automorphisms commute with clicks and reversal") {
    Rng rng(43);
    for (int it = 0; it < 20; ++it) {
      int n = uniform_int(rng, 2, 6);
      Graph y = random_graph(n, 9, rng);
      auto autos = automorphisms(y);
      Orientation o2 = orientation_of_permutation(y, random_permutation(n, rng));
      for (const auto& gamma : autos) {
        CHECK(act(gamma, reverse(o2)) == reverse(act(gamma, o2)));
        for (int v : sources(o2))
          CHECK(act(gamma, click(o2, v)) == click(act(gamma, o2), gamma(v)));
      }
    }
  }
}

TEST_CASE("orbit counts on named graphs") {
  CHECK(orbit_count_acyc(circle_graph(4)) == 3);
  CHECK(orbit_count_acyc(complete_graph(3)) == 1);
  CHECK(orbit_count_acyc(empty_graph(4)) == 1);
  CHECK(orbit_count_acyc(star_graph(3)) == 4);

  CHECK(burnside_alpha_bar(circle_graph(4)) == 3);
  CHECK(burnside_alpha_bar(star_graph(3)) == 4);

  CHECK(kappa_bar(circle_graph(4)) == 2);
  CHECK(delta_bar(circle_graph(4)) == 2);
  CHECK(kappa_bar(complete_graph(3)) == 1);
  CHECK(delta_bar(complete_graph(3)) == 1);
  CHECK(kappa_bar(path_graph(4)) == 1);
  CHECK(delta_bar(path_graph(4)) == 1);
}

TEST_CASE("symmetry report") {
  SymmetryReport rep = symmetry_report(circle_graph(4));
  CHECK(rep.aut_order == 8);
  CHECK(rep.alpha_bar == 3);
  CHECK(rep.kappa_bar == 2);
  CHECK(rep.delta_bar == 2);
}

TEST_CASE("burnside equals the direct orbit count") {
  Rng rng(47);
  for (int it = 0; it < 25; ++it) {
    int n = uniform_int(rng, 2, 6);
    Graph y = random_graph(n, 10, rng);
    CHECK(burnside_alpha_bar(y) == orbit_count_acyc(y));
  }
}

TEST_CASE("bound ordering") {
  Rng rng(53);
  for (int it = 0; it < 20; ++it) {
    int n = uniform_int(rng, 2, 6);
    Graph y = random_graph(n, 10, rng);
    auto cc = classify(y);
    std::int64_t a = static_cast<std::int64_t>(cc.masks.size());
    std::int64_t abar = orbit_count_acyc(y);
    std::int64_t kbar = kappa_bar(y);
    std::int64_t dbar = delta_bar(y);
    CHECK(abar <= a);
    CHECK(kbar <= cc.kappa);
    CHECK(dbar <= cc.delta);
    CHECK(cc.delta <= cc.kappa);
    CHECK(dbar <= kbar);
  }
}

TEST_CASE("dynamics linkage for aut-invariant rules") {
  // uniform symmetric rules on a vertex-transitive graph: words pi and
  // gamma*pi give identical phase portraits up to the state permutation
  Rng rng(59);
  for (int n : {4, 5}) {
    Graph y = circle_graph(n);
    auto sys = make_system(y, 2, "nor", {});
    auto autos = automorphisms(y);
    REQUIRE(rules_aut_invariant(sys, autos));
    for (int it = 0; it < 4; ++it) {
      auto pi = random_permutation(n, rng);
      const auto& gamma = autos[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<int>(autos.size()) - 1))];
      auto sys_pi = sys.with_word(pi);
      auto sys_gpi = sys.with_word(permute_word(gamma, pi));

      // conjugation identity on every state
      for (std::uint64_t i = 0; i < sys.state_count(); ++i) {
        State s = state_from_index(i, n, 2);
        State lhs = apply_sds(sys_gpi, permute_state(gamma, s, 2));
        State rhs = permute_state(gamma, apply_sds(sys_pi, s), 2);
        CHECK(lhs == rhs);
      }

      CHECK(cycle_equivalent(phase_space(sys_pi), phase_space(sys_gpi)));
    }
  }
}

TEST_CASE("kappa classes on orientation orbits are consistent with clicks") {
  // gamma maps whole kappa classes onto kappa classes
  Rng rng(61);
  for (int it = 0; it < 10; ++it) {
    int n = uniform_int(rng, 2, 5);
    Graph y = random_graph(n, 8, rng);
    auto cc = classify(y);
    for (const auto& gamma : automorphisms(y)) {
      std::vector<int> image(static_cast<std::size_t>(cc.kappa), -1);
      for (std::size_t i = 0; i < cc.masks.size(); ++i) {
        Orientation o(y, cc.masks[i]);
        int from = cc.kappa_class[i];
        int to =
            cc.kappa_class[static_cast<std::size_t>(cc.index_of_mask(act(gamma, o).mask()))];
        if (image[static_cast<std::size_t>(from)] == -1)
          image[static_cast<std::size_t>(from)] = to;
        else
          CHECK(image[static_cast<std::size_t>(from)] == to);
      }
    }
  }
}
