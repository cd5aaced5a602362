#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "relaxcol/coloring.hpp"
#include "relaxcol/graph.hpp"

namespace relaxcol {

// Offending instance/coloring attached to a violated certificate; enough to
// replay the failed check.
struct Witness {
  std::string note;
  std::optional<Graph> graph;
  std::optional<Multigraph> multigraph;
  std::optional<Coloring> coloring;
  std::optional<Coloring> second_coloring;
};

struct ReductionCertificate {
  std::string property;
  std::string instance;
  bool holds = true;
  bool flagged = false;  // a downgraded branch was exercised (see lreduction gap)
  std::optional<double> measured_alpha;
  std::optional<double> measured_beta;
  std::optional<Witness> witness;  // present iff holds == false
};

struct RandomGraphSpec {
  int n = 0;
  double edge_probability = 0.0;
  std::uint64_t seed = 0;
};

// Exact optimum by plain full enumeration (independent of the solvers'
// search code). Empty when no feasible coloring exists. Guard: k^n <= 1e8.
std::optional<std::int64_t> oracle_opt(const Graph& g, const ColorScheme& s);
std::optional<std::int64_t> oracle_opt(const Multigraph& g, const ColorScheme& s);

// Exact maximum independent set size. Guard: 2^n <= 1e7.
std::int64_t oracle_mis(const Graph& g);

// Exact maximum cut value. Guard: 2^n <= 1e7.
std::int64_t oracle_maxcut(const Graph& g);

// Certifies, for every s in 1..n, that G has an independent set of size s
// iff the clique-augmented graph admits a (1,2) coloring covering s*q edges.
// The optimum of the augmented graph is evaluated structurally over the
// independent sets of G plus the clique-singleton case. Small q (at most
// |E(G)|) is allowed and expected to produce honest violations.
ReductionCertificate check_mis_equivalence(const Graph& g, std::int64_t q);

// value(collapsed) * (k-1) >= value(input) over feasible (1,k) colorings.
// trials = 0 enumerates every feasible coloring (guarded), otherwise samples.
ReductionCertificate check_collapse_ratio(const Graph& g, int k, int trials, std::uint64_t seed);

// Gadget properties by exhaustion: (i) a conflict-free k-coloring exists,
// (ii) every conflict-free k-coloring separates w2 and w3. Guard: k <= 6.
ReductionCertificate check_gadget(int k);

// Gap bookkeeping of the multigraph reduction: repaired colorings with
// distinct clique colors satisfy the exact gap equality against maxcut;
// repeated-clique-color inputs satisfy gap >= m. trials = 0 enumerates.
ReductionCertificate check_lreduction_gap(const Graph& g, int k, int r, int trials,
                                          std::uint64_t seed);

// Orderings of the generalized cost at computed exponent bounds: large p
// follows the defective cost, small p the conflicted-node count; identical
// conflict profiles cost the same at every p.
ReductionCertificate check_cost_limits(const Graph& g, int trials, std::uint64_t seed);

// Erdos-Renyi G(n, p), identical spec -> identical graph on every platform.
Graph random_graph(const RandomGraphSpec& spec);

// Random-order greedy sampling of a feasible coloring; requires r >= 1.
Coloring random_feasible_coloring(const Graph& g, const ColorScheme& s, std::mt19937_64& rng);
Coloring random_feasible_coloring(const Multigraph& g, const ColorScheme& s, std::mt19937_64& rng);

}  // namespace relaxcol
