#include "relaxcol/coloring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaxcol {

void validate_scheme(const ColorScheme& s) {
  if (s.k < 1) throw std::invalid_argument("scheme needs at least one color");
  if (s.r < 0 || s.r > s.k)
    throw std::invalid_argument("relaxed color count must lie in [0, k]");
}

namespace {

std::int64_t edge_mult(const VertexPair&) { return 1; }
std::int64_t edge_mult(const Multigraph::Edge& e) { return e.multiplicity; }

template <class GraphT>
void check_total(const GraphT& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.vertex_count())
    throw std::invalid_argument("coloring length " + std::to_string(c.size()) +
                                " does not match vertex count " +
                                std::to_string(g.vertex_count()));
}

template <class GraphT>
void check_colors_in_range(const GraphT& g, const Coloring& c, const ColorScheme& s) {
  check_total(g, c);
  for (int col : c)
    if (col < 0 || col >= s.k)
      throw std::invalid_argument("color index " + std::to_string(col) +
                                  " outside 0.." + std::to_string(s.k - 1));
}

template <class GraphT>
ConflictReport profile_impl(const GraphT& g, const Coloring& c) {
  check_total(g, c);
  ConflictReport rep;
  rep.kappa.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : g.edges()) {
    std::int64_t t = edge_mult(e);
    if (c[e.u] == c[e.v]) {
      rep.conflicts += t;
      rep.kappa[e.u] += t;
      rep.kappa[e.v] += t;
      rep.conflict_pairs.push_back({e.u, e.v});
    } else {
      rep.covered += t;
    }
  }
  return rep;
}

template <class GraphT>
bool feasible_impl(const GraphT& g, const Coloring& c, const ColorScheme& s) {
  validate_scheme(s);
  check_colors_in_range(g, c, s);
  for (const auto& e : g.edges())
    if (c[e.u] == c[e.v] && s.proper(c[e.u])) return false;
  return true;
}

template <class GraphT>
std::int64_t covered_impl(const GraphT& g, const Coloring& c, const ColorScheme& s) {
  if (!feasible_impl(g, c, s))
    throw std::invalid_argument("infeasible coloring rejected");
  std::int64_t covered = 0;
  for (const auto& e : g.edges())
    if (c[e.u] != c[e.v]) covered += edge_mult(e);
  return covered;
}

template <class GraphT>
double cost_impl(const GraphT& g, const Coloring& c, const CostParams& params) {
  if (!(params.p > 0.0)) throw std::invalid_argument("cost exponent p must be > 0");
  ConflictReport rep = profile_impl(g, c);
  double cost = 0.0;
  for (std::int64_t kv : rep.kappa)
    if (kv > 0) cost += std::pow(static_cast<double>(kv), params.p);
  return cost;
}

template <class GraphT>
std::int64_t defective_impl(const GraphT& g, const Coloring& c) {
  ConflictReport rep = profile_impl(g, c);
  std::int64_t worst = 0;
  for (std::int64_t kv : rep.kappa) worst = std::max(worst, kv);
  return worst;
}

template <class GraphT>
std::int64_t conflicted_impl(const GraphT& g, const Coloring& c) {
  ConflictReport rep = profile_impl(g, c);
  std::int64_t count = 0;
  for (std::int64_t kv : rep.kappa)
    if (kv > 0) ++count;
  return count;
}

}  // namespace

ConflictReport conflict_profile(const Graph& g, const Coloring& c) { return profile_impl(g, c); }
ConflictReport conflict_profile(const Multigraph& g, const Coloring& c) {
  return profile_impl(g, c);
}

bool is_feasible(const Graph& g, const Coloring& c, const ColorScheme& s) {
  return feasible_impl(g, c, s);
}
bool is_feasible(const Multigraph& g, const Coloring& c, const ColorScheme& s) {
  return feasible_impl(g, c, s);
}

std::int64_t covered_edges(const Graph& g, const Coloring& c, const ColorScheme& s) {
  return covered_impl(g, c, s);
}
std::int64_t covered_edges(const Multigraph& g, const Coloring& c, const ColorScheme& s) {
  return covered_impl(g, c, s);
}

double generalized_cost(const Graph& g, const Coloring& c, const CostParams& params) {
  return cost_impl(g, c, params);
}
double generalized_cost(const Multigraph& g, const Coloring& c, const CostParams& params) {
  return cost_impl(g, c, params);
}

std::int64_t defective_cost(const Graph& g, const Coloring& c) { return defective_impl(g, c); }
std::int64_t defective_cost(const Multigraph& g, const Coloring& c) {
  return defective_impl(g, c);
}

std::int64_t conflicted_node_count(const Graph& g, const Coloring& c) {
  return conflicted_impl(g, c);
}
std::int64_t conflicted_node_count(const Multigraph& g, const Coloring& c) {
  return conflicted_impl(g, c);
}

}  // namespace relaxcol
