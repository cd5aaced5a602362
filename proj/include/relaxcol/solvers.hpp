#pragma once

#include <cstdint>
#include <optional>

#include "relaxcol/coloring.hpp"
#include "relaxcol/graph.hpp"

namespace relaxcol {

enum class Method { exact, structural12, half_approx, greedy, local_search };

const char* method_name(Method m);

struct Solution {
  Coloring coloring;
  std::int64_t value = 0;  // covered edges, recomputable from scratch
  bool feasible = true;
  Method method = Method::exact;
};

// Empty optional marks the infeasible outcome (no feasible coloring found).
using SolveOutcome = std::optional<Solution>;

struct SearchBudget {
  std::int64_t max_iterations = 10000;  // accepted moves across the whole search
  std::uint64_t random_seed = 0;
  int restarts = 0;  // additional perturbed chains
};

struct Objective {
  enum class Kind { covered, generalized, defective };
  Kind kind = Kind::covered;
  double p = 1.0;  // exponent for Kind::generalized
};

// Exhaustive optimum, ties broken by lexicographically smallest assignment.
// Guard: k^n <= 1e8, else TooLargeError.
SolveOutcome solve_exact(const Graph& g, const ColorScheme& s);
SolveOutcome solve_exact(const Multigraph& g, const ColorScheme& s);

// Optimal solution for the fixed scheme (r=1, k=2): the proper class is the
// independent set maximizing its degree sum. Guard: n <= 30.
Solution solve_r12_structural(const Graph& g);

// Greedy conditional-expectation 2-cut assigned to relaxed colors 0 and 1;
// covers at least ceil(|E|/2) edges. Requires r >= 2.
Solution solve_half_approx(const Graph& g, const ColorScheme& s);

// Descending-degree greedy; picks the feasibility-preserving color covering
// the most already-placed incident multiplicity. Infeasible only when r = 0
// and some vertex runs out of colors.
SolveOutcome solve_greedy(const Graph& g, const ColorScheme& s);
SolveOutcome solve_greedy(const Multigraph& g, const ColorScheme& s);

// First-improvement single-vertex recoloring from a greedy seed, feasibility
// preserving, deterministic per seed.
SolveOutcome solve_local_search(const Graph& g, const ColorScheme& s, const Objective& obj,
                                const SearchBudget& budget);
SolveOutcome solve_local_search(const Multigraph& g, const ColorScheme& s, const Objective& obj,
                                const SearchBudget& budget);

}  // namespace relaxcol
