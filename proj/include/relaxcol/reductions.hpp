#pragma once

#include <cstdint>
#include <vector>

#include "relaxcol/coloring.hpp"
#include "relaxcol/graph.hpp"

namespace relaxcol {

// G plus a fully connected clique C. G keeps ids 0..original_n-1,
// C occupies original_n..original_n+clique_size-1.
struct AugmentedGraph {
  Graph graph;
  int original_n = 0;
  int clique_size = 0;
  int clique_first() const { return original_n; }
  bool is_clique_vertex(int v) const { return v >= original_n && v < original_n + clique_size; }
};

AugmentedGraph augment_with_clique(const Graph& g, std::int64_t q);

// Proper-class restriction to the embedded G, with the singleton fallback
// when the proper class misses G entirely. Result is sorted.
std::vector<int> mis_from_coloring(const AugmentedGraph& ag, const Coloring& c);

// Keeps the proper class with the most outgoing edges (ties: lowest class
// index) as the single proper color; merges the rest into the relaxed color.
Coloring collapse_1k_to_12(const Graph& g, const Coloring& c, int k);

// G plus a (k-2)-clique C with heavy parallel edges: C-internal pairs carry
// multiplicity 2m, each (v in G, u in C) pair carries 2*deg(v), G edges stay
// at multiplicity 1. Zero-multiplicity pairs are simply absent.
struct LRedMultigraph {
  Multigraph multigraph;
  int original_n = 0;
  int k = 0;
  int clique_first() const { return original_n; }
  int clique_count() const { return k - 2; }
};

LRedMultigraph build_lred_multigraph(const Graph& g, int k);

// Clique on k+2 nodes minus the edges (w1,w2), (w2,w3), (w3,w4).
// Vertex i stands for w_{i+1}.
Graph gadget_k(int k);

struct GadgetCopy {
  int u = 0, v = 0;           // play w2 and w3
  std::vector<int> internal;  // [w1, w4, w5, ..., w_{k+2}], k ids
};

struct GadgetMap {
  Graph expanded_graph;
  int original_n = 0;   // embedded G vertices
  int multigraph_n = 0; // all embedded multigraph vertices (G plus C)
  int k = 0;
  std::vector<GadgetCopy> copies;
};

// Replaces parallel edges by disjoint gadget copies. A pair is kept as a
// plain edge only when it lies inside G with multiplicity 1; every other
// pair of multiplicity t becomes t copies. Internal ids are assigned
// deterministically: multigraph_n + copy_index*k + offset.
GadgetMap expand_multigraph(const LRedMultigraph& lm);

// Normal form for the multigraph reduction: when C carries k-2 distinct
// colors, every G node moves onto the two colors unused in C and those two
// colors are made relaxed via whole-class swaps. Colorings with a repeated
// color in C are returned unchanged. Value never decreases.
Coloring repair_multigraph_coloring(const LRedMultigraph& lm, const Coloring& c,
                                    const ColorScheme& s);

// Rewrites each gadget copy's internal nodes to the canonical completion:
// 0 conflicts when the endpoints differ, exactly 1 conflict on (w1,w4)
// otherwise. Endpoint colors are untouched; value never decreases.
Coloring repair_gadget_coloring(const GadgetMap& gm, const Coloring& c, const ColorScheme& s);

// Restriction of a repaired coloring to the embedded G, remapped onto
// colors {0,1}. Rejects colorings with more than 2 colors on G.
Coloring extract_maxcut(const LRedMultigraph& lm, const Coloring& c);
Coloring extract_maxcut(const GadgetMap& gm, const Coloring& c);

}  // namespace relaxcol
