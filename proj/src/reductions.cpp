#include "relaxcol/reductions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "relaxcol/errors.hpp"

namespace relaxcol {

namespace {

void require_feasible(const Multigraph& g, const Coloring& c, const ColorScheme& s) {
  if (!is_feasible(g, c, s)) throw std::invalid_argument("infeasible coloring rejected");
}

void require_feasible(const Graph& g, const Coloring& c, const ColorScheme& s) {
  if (!is_feasible(g, c, s)) throw std::invalid_argument("infeasible coloring rejected");
}

Coloring restrict_to_two_colors(int n_orig, const Coloring& c) {
  std::array<int, 2> used{};
  int distinct = 0;
  for (int v = 0; v < n_orig; ++v) {
    bool known = false;
    for (int i = 0; i < distinct; ++i)
      if (used[i] == c[v]) known = true;
    if (known) continue;
    if (distinct == 2)
      throw std::invalid_argument("more than 2 colors on embedded nodes; repair not applied");
    used[distinct++] = c[v];
  }
  if (distinct == 2 && used[0] > used[1]) std::swap(used[0], used[1]);
  Coloring out(n_orig, 0);
  for (int v = 0; v < n_orig; ++v)
    if (distinct == 2 && c[v] == used[1]) out[v] = 1;
  return out;
}

}  // namespace

AugmentedGraph augment_with_clique(const Graph& g, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("clique size must be positive");
  const int n = g.vertex_count();
  if (g.edge_count() + q * (q - 1) / 2 + static_cast<std::int64_t>(n) * q > 5'000'000)
    throw TooLargeError("clique augmentation guard: more than 5e6 edges");
  const int qi = static_cast<int>(q);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.edge_count() + q * (q - 1) / 2 + n * q));
  for (const VertexPair& e : g.edges()) pairs.push_back({e.u, e.v});
  for (int i = 0; i < qi; ++i) {
    for (int j = i + 1; j < qi; ++j) pairs.push_back({n + i, n + j});
    for (int v = 0; v < n; ++v) pairs.push_back({v, n + i});
  }
  return AugmentedGraph{Graph::from_pairs(n + qi, std::move(pairs)), n, qi};
}

std::vector<int> mis_from_coloring(const AugmentedGraph& ag, const Coloring& c) {
  require_feasible(ag.graph, c, ColorScheme{2, 1});
  std::vector<int> set;
  for (int v = 0; v < ag.original_n; ++v)
    if (c[v] == 1) set.push_back(v);  // color 1 is the proper color
  if (set.empty() && ag.original_n >= 1) set.push_back(0);
  return set;
}

Coloring collapse_1k_to_12(const Graph& g, const Coloring& c, int k) {
  if (k < 2) throw std::invalid_argument("collapse needs k >= 2");
  require_feasible(g, c, ColorScheme{k, 1});

  // out(I_j): edges with exactly one endpoint in proper class j.
  std::vector<std::int64_t> out_count(k, 0);
  for (const VertexPair& e : g.edges()) {
    if (c[e.u] == c[e.v]) continue;
    if (c[e.u] >= 1) ++out_count[c[e.u]];
    if (c[e.v] >= 1) ++out_count[c[e.v]];
  }
  int best = 1;
  for (int j = 2; j < k; ++j)
    if (out_count[j] > out_count[best]) best = j;

  Coloring out(c.size(), 0);
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == best) out[v] = 1;
  return out;
}

LRedMultigraph build_lred_multigraph(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("multigraph reduction needs k >= 3 (k = 2 is the identity)");
  const int n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  Multigraph mg(n + k - 2);
  for (const VertexPair& e : g.edges()) mg.add_edge(e.u, e.v, 1);
  for (int i = 0; i < k - 2; ++i) {
    for (int j = i + 1; j < k - 2; ++j)
      if (m > 0) mg.add_edge(n + i, n + j, 2 * m);
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > 0) mg.add_edge(v, n + i, 2 * g.degree(v));
  }
  return LRedMultigraph{std::move(mg), n, k};
}

Graph gadget_k(int k) {
  if (k < 2) throw std::invalid_argument("gadget needs k >= 2");
  Graph g(k + 2);
  for (int i = 0; i < k + 2; ++i)
    for (int j = i + 1; j < k + 2; ++j) {
      bool deleted = (i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 3);
      if (!deleted) g.add_edge(i, j);
    }
  return g;
}

GadgetMap expand_multigraph(const LRedMultigraph& lm) {
  const Multigraph& mg = lm.multigraph;
  const int k = lm.k;
  if (k < 2) throw std::invalid_argument("expansion needs k >= 2");
  const int n_embed = mg.vertex_count();

  auto kept_plain = [&](const Multigraph::Edge& e) {
    return e.u < lm.original_n && e.v < lm.original_n && e.multiplicity == 1;
  };

  std::int64_t copies = 0;
  for (const auto& e : mg.edges())
    if (!kept_plain(e)) copies += e.multiplicity;
  const std::int64_t per_copy_edges = static_cast<std::int64_t>(k + 2) * (k + 1) / 2 - 3;
  if (copies * per_copy_edges + mg.pair_count() > 5'000'000)
    throw TooLargeError("gadget expansion guard: more than 5e6 edges");

  GadgetMap gm;
  gm.original_n = lm.original_n;
  gm.multigraph_n = n_embed;
  gm.k = k;

  std::vector<std::pair<int, int>> pairs;
  int copy_index = 0;
  for (const auto& e : mg.edges()) {
    if (kept_plain(e)) {
      pairs.push_back({e.u, e.v});
      continue;
    }
    for (std::int64_t t = 0; t < e.multiplicity; ++t, ++copy_index) {
      const int base = n_embed + copy_index * k;
      GadgetCopy copy;
      copy.u = e.u;
      copy.v = e.v;
      for (int i = 0; i < k; ++i) copy.internal.push_back(base + i);

      // role i stands for w_{i+1}; u and v play w2 and w3
      std::vector<int> role(k + 2);
      role[0] = base;      // w1
      role[1] = e.u;       // w2
      role[2] = e.v;       // w3
      role[3] = base + 1;  // w4
      for (int i = 4; i < k + 2; ++i) role[i] = base + (i - 2);
      for (int i = 0; i < k + 2; ++i)
        for (int j = i + 1; j < k + 2; ++j) {
          bool deleted = (i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 3);
          if (!deleted) pairs.push_back({role[i], role[j]});
        }
      gm.copies.push_back(std::move(copy));
    }
  }
  gm.expanded_graph =
      Graph::from_pairs(n_embed + static_cast<int>(copies) * k, std::move(pairs));
  return gm;
}

Coloring repair_multigraph_coloring(const LRedMultigraph& lm, const Coloring& c,
                                    const ColorScheme& s) {
  const Multigraph& mg = lm.multigraph;
  validate_scheme(s);
  if (s.k != lm.k) throw std::invalid_argument("scheme k must match the reduction's k");
  if (s.r < 2) throw std::invalid_argument("repair requires at least two relaxed colors");
  require_feasible(mg, c, s);

  const int cl_first = lm.clique_first();
  const int cl_count = lm.clique_count();

  std::vector<char> in_clique(s.k, 0);
  for (int i = 0; i < cl_count; ++i) {
    int col = c[cl_first + i];
    if (in_clique[col]) return c;  // repeated clique color: the gap argument needs no normal form
    in_clique[col] = 1;
  }

  Coloring cur = c;
  std::array<int, 2> free_colors{};
  int nf = 0;
  for (int col = 0; col < s.k && nf < 2; ++col)
    if (!in_clique[col]) free_colors[nf++] = col;

  // Move every G node off the clique colors; between the two free colors take
  // the one covering more incident multiplicity, ties to the lower index.
  for (int v = 0; v < lm.original_n; ++v) {
    if (!in_clique[cur[v]]) continue;
    std::int64_t covered_at[2] = {0, 0};
    for (const auto& [u, t] : mg.incident(v))
      for (int f = 0; f < 2; ++f)
        if (cur[u] != free_colors[f]) covered_at[f] += t;
    cur[v] = covered_at[1] > covered_at[0] ? free_colors[1] : free_colors[0];
  }

  // Both colors used on G have to end up relaxed. A proper free color is
  // traded with a relaxed color sitting on a single clique node; swapping
  // whole color classes keeps the covered-edge count intact.
  for (int f = 0; f < 2; ++f) {
    if (s.relaxed(free_colors[f])) continue;
    int swap_with = -1;
    for (int col = 0; col < s.r; ++col)
      if (in_clique[col]) {
        swap_with = col;
        break;
      }
    if (swap_with < 0)
      throw std::logic_error("no relaxed clique color available for the swap");
    for (int v = 0; v < mg.vertex_count(); ++v) {
      if (cur[v] == free_colors[f])
        cur[v] = swap_with;
      else if (cur[v] == swap_with)
        cur[v] = free_colors[f];
    }
    in_clique[swap_with] = 0;
    in_clique[free_colors[f]] = 1;
    free_colors[f] = swap_with;
  }
  return cur;
}

Coloring repair_gadget_coloring(const GadgetMap& gm, const Coloring& c, const ColorScheme& s) {
  validate_scheme(s);
  if (s.k != gm.k) throw std::invalid_argument("scheme k must match the reduction's k");
  if (s.r < 2) throw std::invalid_argument("repair requires at least two relaxed colors");
  require_feasible(gm.expanded_graph, c, s);

  Coloring cur = c;
  for (const GadgetCopy& copy : gm.copies) {
    const int a = cur[copy.u];
    const int b = cur[copy.v];
    std::vector<int> rest;
    if (a != b) {
      // Conflict-free completion: internals take all k colors, w1 mirrors u
      // and w4 mirrors v across the missing edges.
      cur[copy.internal[0]] = a;
      cur[copy.internal[1]] = b;
      for (int col = 0; col < s.k; ++col)
        if (col != a && col != b) rest.push_back(col);
    } else {
      int c2 = -1;
      for (int col = 0; col < s.r; ++col)
        if (col != a) {
          c2 = col;
          break;
        }
      // r >= 2 guarantees a relaxed color distinct from the endpoints'.
      cur[copy.internal[0]] = c2;
      cur[copy.internal[1]] = c2;  // the single conflict sits on (w1, w4)
      for (int col = 0; col < s.k; ++col)
        if (col != a && col != c2) rest.push_back(col);
    }
    for (std::size_t i = 2; i < copy.internal.size(); ++i)
      cur[copy.internal[i]] = rest[i - 2];
  }
  return cur;
}

Coloring extract_maxcut(const LRedMultigraph& lm, const Coloring& c) {
  if (static_cast<int>(c.size()) != lm.multigraph.vertex_count())
    throw std::invalid_argument("coloring length does not match the multigraph");
  return restrict_to_two_colors(lm.original_n, c);
}

Coloring extract_maxcut(const GadgetMap& gm, const Coloring& c) {
  if (static_cast<int>(c.size()) != gm.expanded_graph.vertex_count())
    throw std::invalid_argument("coloring length does not match the expanded graph");
  return restrict_to_two_colors(gm.original_n, c);
}

}  // namespace relaxcol
