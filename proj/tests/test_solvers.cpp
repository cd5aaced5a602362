#include <random>
#include <stdexcept>

#include "doctest.h"
#include "relaxcol/errors.hpp"
#include "relaxcol/solvers.hpp"
#include "relaxcol/verify.hpp"
#include "test_util.hpp"

using namespace relaxcol;
namespace tu = testutil;

TEST_CASE("solve_exact on the named examples") {
  // K3 under (2,2): brute force says 2 (frozen), lex-smallest optimum is (0,0,1)
  auto brute = tu::brute_best_covered(tu::complete(3), ColorScheme{2, 2});
  REQUIRE(brute.has_value());
  CHECK(*brute == 2);
  auto sol = solve_exact(tu::complete(3), ColorScheme{2, 2});
  REQUIRE(sol.has_value());
  CHECK(sol->value == 2);
  CHECK(sol->coloring == Coloring{0, 0, 1});

  // odd cycle is not 2-colorable
  CHECK(!solve_exact(tu::complete(3), ColorScheme{2, 0}).has_value());

  auto p3 = solve_exact(tu::path(3), ColorScheme{2, 0});
  REQUIRE(p3.has_value());
  CHECK(p3->value == 2);
  CHECK(p3->coloring == Coloring{0, 1, 0});

  // mixed scheme: all three edges coverable, lex-smallest proper-ish optimum
  auto k3 = solve_exact(tu::complete(3), ColorScheme{3, 1});
  REQUIRE(k3.has_value());
  CHECK(k3->value == 3);
  CHECK(k3->coloring == Coloring{0, 1, 2});

  // empty graph
  auto empty = solve_exact(Graph(0), ColorScheme{2, 1});
  REQUIRE(empty.has_value());
  CHECK(empty->value == 0);
  CHECK(empty->coloring.empty());

  CHECK_THROWS_AS(solve_exact(Graph(40), ColorScheme{3, 1}), TooLargeError);
}

TEST_CASE("solve_exact returns the lex-smallest optimum, against full enumeration") {
  // first optimum in lexicographic order over all k^n assignments
  auto lex_min_optimum = [](const Graph& g, const ColorScheme& s) -> SolveOutcome {
    const int n = g.vertex_count();
    Coloring c(n, 0);
    std::optional<Coloring> best;
    std::int64_t best_value = -1;
    while (true) {
      bool feasible = true;
      std::int64_t covered = 0;
      for (const auto& e : g.edges()) {
        if (c[e.u] == c[e.v]) {
          if (c[e.u] >= s.r) feasible = false;
        } else {
          ++covered;
        }
      }
      if (feasible && covered > best_value) {
        best_value = covered;
        best = c;
      }
      int i = n - 1;
      while (i >= 0 && ++c[i] == s.k) c[i--] = 0;
      if (i < 0) break;
    }
    if (!best) return std::nullopt;
    return Solution{*best, best_value, true, Method::exact};
  };

  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : tu::all_graphs(n))
      for (ColorScheme s : {ColorScheme{2, 0}, ColorScheme{2, 1}, ColorScheme{2, 2},
                            ColorScheme{3, 1}, ColorScheme{3, 2}}) {
        auto expect = lex_min_optimum(g, s);
        auto got = solve_exact(g, s);
        REQUIRE(expect.has_value() == got.has_value());
        if (expect) {
          CHECK(got->value == expect->value);
          CHECK(got->coloring == expect->coloring);
        }
      }
}

TEST_CASE("solve_exact matches the verify oracle on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    int n = static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    int k = 1 + static_cast<int>(rng() % 3);
    int r = static_cast<int>(rng() % (k + 1));
    ColorScheme s{k, r};
    auto sol = solve_exact(g, s);
    auto opt = oracle_opt(g, s);
    CHECK(sol.has_value() == opt.has_value());
    if (sol && opt) {
      CHECK(sol->value == *opt);
      CHECK(covered_edges(g, sol->coloring, s) == sol->value);
    }
  }
}

TEST_CASE("structural (1,2) solver") {
  CHECK(solve_r12_structural(tu::complete(3)).value == 2);
  CHECK(solve_r12_structural(tu::path(3)).value == 2);
  CHECK(solve_r12_structural(tu::star(4)).value == 4);
  CHECK(solve_r12_structural(Graph(0)).value == 0);
  CHECK_THROWS_AS(solve_r12_structural(Graph(31)), TooLargeError);

  // equals the exhaustive optimum on every small graph
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : tu::all_graphs(n)) {
      Solution s = solve_r12_structural(g);
      auto opt = tu::brute_best_covered(g, ColorScheme{2, 1});
      REQUIRE(opt.has_value());
      CHECK(s.value == *opt);
      CHECK(covered_edges(g, s.coloring, ColorScheme{2, 1}) == s.value);
    }

  // and on random graphs up to n = 7
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph({7, 0.2 + 0.1 * (trial % 7), rng()});
    auto opt = tu::brute_best_covered(g, ColorScheme{2, 1});
    REQUIRE(opt.has_value());
    CHECK(solve_r12_structural(g).value == *opt);
  }
}

TEST_CASE("half approximation traces and guarantee") {
  auto c5 = solve_half_approx(tu::cycle(5), ColorScheme{2, 2});
  CHECK(c5.value == 4);  // greedy trace v0..v4

  auto edge = solve_half_approx(tu::path(2), ColorScheme{3, 2});
  CHECK(edge.value == 1);

  auto k4 = solve_half_approx(tu::complete(4), ColorScheme{2, 2});
  CHECK(k4.value == 4);  // also the true maxcut of K4

  CHECK_THROWS_AS(solve_half_approx(tu::path(3), ColorScheme{2, 1}), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 20);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    Solution sol = solve_half_approx(g, ColorScheme{3, 2});
    CHECK(sol.value >= (g.edge_count() + 1) / 2);
    CHECK(covered_edges(g, sol.coloring, ColorScheme{3, 2}) == sol.value);
    for (int color : sol.coloring) CHECK(color < 2);  // only the two relaxed colors
  }
}

TEST_CASE("greedy traces") {
  auto p3 = solve_greedy(tu::path(3), ColorScheme{2, 0});
  REQUIRE(p3.has_value());
  CHECK(p3->value == 2);

  auto k3 = solve_greedy(tu::complete(3), ColorScheme{3, 1});
  REQUIRE(k3.has_value());
  CHECK(k3->value == 3);  // finds the proper 3-coloring

  CHECK(!solve_greedy(tu::complete(3), ColorScheme{2, 0}).has_value());

  // with a relaxed color available greedy always lands somewhere feasible
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    auto sol = solve_greedy(g, ColorScheme{3, 1});
    REQUIRE(sol.has_value());
    CHECK(is_feasible(g, sol->coloring, ColorScheme{3, 1}));
    CHECK(covered_edges(g, sol->coloring, ColorScheme{3, 1}) == sol->value);
  }
}

TEST_CASE("local search contracts") {
  // zero budget returns the greedy seed untouched
  auto greedy = solve_greedy(tu::cycle(5), ColorScheme{2, 2});
  auto frozen = solve_local_search(tu::cycle(5), ColorScheme{2, 2},
                                   {Objective::Kind::covered, 1.0}, {0, 123, 3});
  REQUIRE(greedy.has_value());
  REQUIRE(frozen.has_value());
  CHECK(frozen->coloring == greedy->coloring);

  // monotone improvement over the seed
  auto improved = solve_local_search(tu::cycle(5), ColorScheme{2, 2},
                                     {Objective::Kind::covered, 1.0}, {1000, 1, 2});
  REQUIRE(improved.has_value());
  CHECK(improved->value >= greedy->value);

  // local = global on K3 under (2,2)
  auto k3 = solve_local_search(tu::complete(3), ColorScheme{2, 2},
                               {Objective::Kind::covered, 1.0}, {1000, 0, 0});
  REQUIRE(k3.has_value());
  CHECK(k3->value == 2);

  // infeasible seeding propagates
  CHECK(!solve_local_search(tu::complete(3), ColorScheme{2, 0},
                            {Objective::Kind::covered, 1.0}, {100, 0, 0})
             .has_value());

  // deterministic per seed
  auto a = solve_local_search(tu::cycle(7), ColorScheme{3, 2},
                              {Objective::Kind::generalized, 2.0}, {500, 77, 4});
  auto b = solve_local_search(tu::cycle(7), ColorScheme{3, 2},
                              {Objective::Kind::generalized, 2.0}, {500, 77, 4});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->coloring == b->coloring);
}

TEST_CASE("local search never worsens cost objectives") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    ColorScheme s{3, 2};
    auto seed = solve_greedy(g, s);
    REQUIRE(seed.has_value());
    for (auto kind : {Objective::Kind::generalized, Objective::Kind::defective}) {
      Objective obj{kind, 2.0};
      auto sol = solve_local_search(g, s, obj, {200, rng(), 2});
      REQUIRE(sol.has_value());
      CHECK(is_feasible(g, sol->coloring, s));
      if (kind == Objective::Kind::generalized)
        CHECK(generalized_cost(g, sol->coloring, {2.0}) <=
              generalized_cost(g, seed->coloring, {2.0}) + 1e-9);
      else
        CHECK(defective_cost(g, sol->coloring) <= defective_cost(g, seed->coloring));
    }
  }
}

TEST_CASE("exact dominates every other solver") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    int k = 2 + static_cast<int>(rng() % 2);
    int r = static_cast<int>(rng() % (k + 1));
    ColorScheme s{k, r};
    auto exact = solve_exact(g, s);

    auto check_dominated = [&](const SolveOutcome& other) {
      if (!other.has_value()) return;
      REQUIRE(exact.has_value());
      CHECK(exact->value >= other->value);
    };
    check_dominated(solve_greedy(g, s));
    check_dominated(solve_local_search(g, s, {Objective::Kind::covered, 1.0},
                                       {200, static_cast<std::uint64_t>(trial), 1}));
    if (r >= 2) check_dominated(solve_half_approx(g, s));
    if (k == 2 && r == 1) check_dominated(solve_r12_structural(g));
  }
}

TEST_CASE("solvers accept multigraphs") {
  Multigraph mg(3);
  mg.add_edge(0, 1, 3);
  mg.add_edge(1, 2, 2);
  mg.add_edge(0, 2, 1);
  auto sol = solve_exact(mg, ColorScheme{2, 2});
  REQUIRE(sol.has_value());
  CHECK(sol->value == 5);  // cut {1} vs {0,2}: 3 + 2
  auto opt = oracle_opt(mg, ColorScheme{2, 2});
  REQUIRE(opt.has_value());
  CHECK(*opt == 5);

  auto greedy = solve_greedy(mg, ColorScheme{2, 2});
  REQUIRE(greedy.has_value());
  CHECK(greedy->value <= sol->value);
}
