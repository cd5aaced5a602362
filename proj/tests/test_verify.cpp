#include <random>
#include <stdexcept>

#include "doctest.h"
#include "relaxcol/errors.hpp"
#include "relaxcol/reductions.hpp"
#include "relaxcol/solvers.hpp"
#include "relaxcol/verify.hpp"
#include "test_util.hpp"

using namespace relaxcol;
namespace tu = testutil;

TEST_CASE("oracle_opt examples") {
  auto k3 = oracle_opt(tu::complete(3), ColorScheme{2, 2});
  REQUIRE(k3.has_value());
  CHECK(*k3 == 2);

  CHECK(!oracle_opt(tu::cycle(5), ColorScheme{2, 0}).has_value());  // odd cycle

  auto c5 = oracle_opt(tu::cycle(5), ColorScheme{3, 0});
  REQUIRE(c5.has_value());
  CHECK(*c5 == 5);

  CHECK_THROWS_AS(oracle_opt(Graph(40), ColorScheme{3, 0}), TooLargeError);
}

TEST_CASE("oracle_mis and oracle_maxcut examples") {
  CHECK(oracle_mis(tu::complete(3)) == 1);
  CHECK(oracle_mis(tu::path(3)) == 2);
  CHECK(oracle_mis(tu::cycle(5)) == 2);
  CHECK(oracle_maxcut(tu::complete(3)) == 2);
  CHECK(oracle_maxcut(tu::cycle(5)) == 4);
  CHECK(oracle_maxcut(tu::path(2)) == 1);
  CHECK_THROWS_AS(oracle_mis(Graph(24)), TooLargeError);
  CHECK_THROWS_AS(oracle_maxcut(Graph(24)), TooLargeError);
}

TEST_CASE("oracles agree with the test-local brute forces") {
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : tu::all_graphs(n)) {
      CHECK(oracle_mis(g) == tu::brute_mis(g));
      CHECK(oracle_maxcut(g) == tu::brute_max_cut(g));
      auto opt = oracle_opt(g, ColorScheme{2, 1});
      auto brute = tu::brute_best_covered(g, ColorScheme{2, 1});
      REQUIRE(opt.has_value() == brute.has_value());
      if (opt) CHECK(*opt == *brute);
    }
}

TEST_CASE("oracle cross-validation across problem views") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng() % 7);
    Graph g = random_graph({n, 0.5, rng()});
    auto as_cut = oracle_opt(g, ColorScheme{2, 2});
    REQUIRE(as_cut.has_value());
    CHECK(*as_cut == oracle_maxcut(g));
    auto as_12 = oracle_opt(g, ColorScheme{2, 1});
    REQUIRE(as_12.has_value());
    CHECK(*as_12 == solve_r12_structural(g).value);
  }
}

TEST_CASE("feasible sets only grow with extra colors") {
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : tu::all_graphs(n)) {
      auto two = oracle_opt(g, ColorScheme{2, 1});
      auto three = oracle_opt(g, ColorScheme{3, 1});
      REQUIRE(two.has_value());
      REQUIRE(three.has_value());
      CHECK(*two <= *three);
    }
}

TEST_CASE("structural solver certified against full enumeration on augmented graphs") {
  std::mt19937_64 rng(53);
  for (int n = 1; n <= 3; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      Graph g = random_graph({n, 0.5, rng()});
      AugmentedGraph ag = augment_with_clique(g, static_cast<std::int64_t>(n) * n);
      REQUIRE(ag.graph.vertex_count() <= 12);
      auto opt = oracle_opt(ag.graph, ColorScheme{2, 1});
      REQUIRE(opt.has_value());
      CHECK(solve_r12_structural(ag.graph).value == *opt);
    }
}

TEST_CASE("mis-equivalence certificates") {
  // P3: independent sets of sizes 1 and 2 exist
  auto p3 = check_mis_equivalence(tu::path(3), 9);
  CHECK(p3.holds);
  CHECK(!p3.witness.has_value());

  // K3: opt(G') = 2 + 9 = 11 covers 1*9 but not 2*9
  auto k3 = check_mis_equivalence(tu::complete(3), 9);
  CHECK(k3.holds);
  CHECK(solve_r12_structural(augment_with_clique(tu::complete(3), 9).graph).value == 11);

  // empty 3-vertex graph: the whole vertex set is independent, value 3 * (0 + 9)
  CHECK(solve_r12_structural(augment_with_clique(Graph(3), 9).graph).value == 27);

  // empty 3-vertex graph: all vertices independent, opt = 27
  auto empty3 = check_mis_equivalence(Graph(3), 9);
  CHECK(empty3.holds);

  // n = 0 is vacuous
  CHECK(check_mis_equivalence(Graph(0), 1).holds);
}

TEST_CASE("mis-equivalence violations carry a replayable witness") {
  // q=1 is below the edge count threshold, so the biconditional honestly fails
  auto cert = check_mis_equivalence(tu::complete(3), 1);
  CHECK(!cert.holds);
  REQUIRE(cert.witness.has_value());
  REQUIRE(cert.witness->graph.has_value());
  auto replay = check_mis_equivalence(*cert.witness->graph, 1);
  CHECK(!replay.holds);  // same violation reproduces
}

TEST_CASE("collapse-ratio certificates") {
  auto p4 = check_collapse_ratio(tu::path(4), 3, 0, 0);  // exhaustive
  CHECK(p4.holds);
  REQUIRE(p4.measured_alpha.has_value());
  CHECK(*p4.measured_alpha <= 2.0 + 1e-12);

  auto identity = check_collapse_ratio(tu::path(4), 2, 0, 0);
  CHECK(identity.holds);
  CHECK(*identity.measured_alpha == doctest::Approx(1.0));

  CHECK(check_collapse_ratio(Graph(0), 3, 0, 0).holds);

  auto sampled = check_collapse_ratio(tu::cycle(6), 4, 200, 7);
  CHECK(sampled.holds);
}

TEST_CASE("gadget certificates for k = 2..5") {
  for (int k = 2; k <= 5; ++k) {
    auto cert = check_gadget(k);
    CHECK(cert.holds);
    CHECK(!cert.witness.has_value());
  }
  CHECK_THROWS_AS(check_gadget(1), std::invalid_argument);
  CHECK_THROWS_AS(check_gadget(8), TooLargeError);  // 8^10 breaks the k^(k+2) guard
}

TEST_CASE("lreduction gap certificates") {
  auto t33 = check_lreduction_gap(tu::complete(3), 3, 3, 0, 0);
  CHECK(t33.holds);
  if (t33.measured_beta) CHECK(*t33.measured_beta == doctest::Approx(1.0));

  auto t42 = check_lreduction_gap(tu::complete(3), 4, 2, 0, 0);
  CHECK(t42.holds);

  auto e32 = check_lreduction_gap(tu::path(2), 3, 2, 0, 0);
  CHECK(e32.holds);

  CHECK_THROWS_AS(check_lreduction_gap(tu::path(2), 2, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_lreduction_gap(tu::path(2), 3, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("cost-limit certificates") {
  CHECK(check_cost_limits(tu::complete(4), 200, 1).holds);
  CHECK(check_cost_limits(tu::cycle(6), 200, 2).holds);
  CHECK(check_cost_limits(Graph(0), 10, 3).holds);

  // deterministic per seed
  auto a = check_cost_limits(tu::complete(4), 100, 9);
  auto b = check_cost_limits(tu::complete(4), 100, 9);
  CHECK(a.instance == b.instance);
  CHECK(a.holds == b.holds);
}

TEST_CASE("random_graph") {
  Graph empty = random_graph({5, 0.0, 1});
  CHECK(empty.edge_count() == 0);

  Graph full = random_graph({5, 1.0, 1});
  CHECK(full.edge_count() == 10);

  Graph a = random_graph({5, 0.5, 12345});
  Graph b = random_graph({5, 0.5, 12345});
  CHECK(a == b);
  Graph c = random_graph({5, 0.5, 54321});
  CHECK(a.vertex_count() == c.vertex_count());  // may or may not differ in edges

  CHECK_THROWS_AS(random_graph({5, 1.5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(random_graph({-1, 0.5, 0}), std::invalid_argument);
}

TEST_CASE("random feasible colorings are feasible and deterministic") {
  Graph g = random_graph({8, 0.5, 2});
  for (int k : {2, 3, 4})
    for (int r = 1; r <= k; ++r) {
      std::mt19937_64 rng(100 + k * 10 + r);
      for (int t = 0; t < 20; ++t) {
        Coloring c = random_feasible_coloring(g, ColorScheme{k, r}, rng);
        CHECK(is_feasible(g, c, ColorScheme{k, r}));
      }
    }

  std::mt19937_64 r1(7), r2(7);
  CHECK(random_feasible_coloring(g, ColorScheme{3, 2}, r1) ==
        random_feasible_coloring(g, ColorScheme{3, 2}, r2));

  std::mt19937_64 r3(7);
  CHECK_THROWS_AS(random_feasible_coloring(g, ColorScheme{2, 0}, r3), std::invalid_argument);
}
