#pragma once

#include <cstdint>
#include <vector>

#include "relaxcol/graph.hpp"

namespace relaxcol {

// k colors indexed 0..k-1. Indices 0..r-1 are relaxed (conflicts allowed),
// indices r..k-1 are proper (each class must be an independent set).
struct ColorScheme {
  int k = 1;
  int r = 0;
  bool relaxed(int color) const { return color < r; }
  bool proper(int color) const { return color >= r; }
  friend bool operator==(const ColorScheme&, const ColorScheme&) = default;
};

void validate_scheme(const ColorScheme& s);  // k >= 1, 0 <= r <= k

// Total assignment vertex -> color index.
using Coloring = std::vector<int>;

struct ConflictReport {
  std::vector<std::int64_t> kappa;          // per-vertex conflict count, multiplicity-weighted
  std::vector<VertexPair> conflict_pairs;   // distinct monochromatic pairs
  std::int64_t covered = 0;
  std::int64_t conflicts = 0;               // multiplicity-weighted
};

struct CostParams {
  double p = 1.0;  // exponent, must be > 0
};

ConflictReport conflict_profile(const Graph& g, const Coloring& c);
ConflictReport conflict_profile(const Multigraph& g, const Coloring& c);

// True iff every proper color class induces no edge.
bool is_feasible(const Graph& g, const Coloring& c, const ColorScheme& s);
bool is_feasible(const Multigraph& g, const Coloring& c, const ColorScheme& s);

// Number of non-conflict edges (with multiplicity). Rejects infeasible colorings.
std::int64_t covered_edges(const Graph& g, const Coloring& c, const ColorScheme& s);
std::int64_t covered_edges(const Multigraph& g, const Coloring& c, const ColorScheme& s);

// Sum over vertices of kappa(v)^p, with 0^p defined as 0.
double generalized_cost(const Graph& g, const Coloring& c, const CostParams& params);
double generalized_cost(const Multigraph& g, const Coloring& c, const CostParams& params);

// max_v kappa(v)
std::int64_t defective_cost(const Graph& g, const Coloring& c);
std::int64_t defective_cost(const Multigraph& g, const Coloring& c);

// |{v : kappa(v) > 0}|
std::int64_t conflicted_node_count(const Graph& g, const Coloring& c);
std::int64_t conflicted_node_count(const Multigraph& g, const Coloring& c);

}  // namespace relaxcol
