#pragma once

// Shared test helpers: tiny graph builders and independent brute-force
// oracles. The oracles are plain loops sharing no code with the solvers or
// the verify module.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "relaxcol/coloring.hpp"
#include "relaxcol/graph.hpp"

namespace testutil {

inline relaxcol::Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  relaxcol::Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

inline relaxcol::Graph complete(int n) {
  relaxcol::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline relaxcol::Graph cycle(int n) {
  relaxcol::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline relaxcol::Graph path(int n) {
  relaxcol::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// star with the center at vertex 0
inline relaxcol::Graph star(int leaves) {
  relaxcol::Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// every graph on n labelled vertices (edge subsets); n <= 5 is sane
inline std::vector<relaxcol::Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<relaxcol::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    relaxcol::Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

// Best covered-edge value over all feasible colorings, by plain odometer.
inline std::optional<long long> brute_best_covered(const relaxcol::Graph& g,
                                                   relaxcol::ColorScheme s) {
  const int n = g.vertex_count();
  std::vector<int> c(n, 0);
  std::optional<long long> best;
  while (true) {
    long long covered = 0;
    bool feasible = true;
    for (const auto& e : g.edges()) {
      if (c[e.u] == c[e.v]) {
        if (c[e.u] >= s.r) feasible = false;
      } else {
        ++covered;
      }
    }
    if (feasible && (!best || covered > *best)) best = covered;
    int i = n - 1;
    while (i >= 0 && ++c[i] == s.k) c[i--] = 0;
    if (i < 0) break;
  }
  return best;
}

inline long long brute_max_cut(const relaxcol::Graph& g) {
  const int n = g.vertex_count();
  long long best = 0;
  for (std::uint32_t side = 0; side < (n == 0 ? 1u : 1u << n); ++side) {
    long long cut = 0;
    for (const auto& e : g.edges())
      if (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) ++cut;
    if (cut > best) best = cut;
  }
  return best;
}

inline long long brute_mis(const relaxcol::Graph& g) {
  const int n = g.vertex_count();
  long long best = 0;
  for (std::uint32_t set = 0; set < (n == 0 ? 1u : 1u << n); ++set) {
    bool independent = true;
    long long size = 0;
    for (int v = 0; v < n && independent; ++v) {
      if (!((set >> v) & 1u)) continue;
      ++size;
      for (int u : g.neighbors(v))
        if (u < v && ((set >> u) & 1u)) independent = false;
    }
    if (independent && size > best) best = size;
  }
  return best;
}

inline relaxcol::Coloring random_coloring(int n, int k, std::mt19937_64& rng) {
  relaxcol::Coloring c(n);
  for (int v = 0; v < n; ++v) c[v] = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  return c;
}

}  // namespace testutil
