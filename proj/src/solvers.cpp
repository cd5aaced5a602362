#include "relaxcol/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "relaxcol/errors.hpp"

namespace relaxcol {

const char* method_name(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::structural12: return "structural12";
    case Method::half_approx: return "half";
    case Method::greedy: return "greedy";
    case Method::local_search: return "local";
  }
  return "?";
}

namespace {

// Uniform adjacency-with-multiplicity view so the enumerative and greedy
// code paths serve both graph flavors.
struct AdjView {
  int n = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj;
  std::vector<Multigraph::Edge> edge_list;  // u < v
  std::int64_t total = 0;

  static AdjView of(const Graph& g) {
    AdjView view;
    view.n = g.vertex_count();
    view.adj.resize(view.n);
    for (int v = 0; v < view.n; ++v)
      for (int u : g.neighbors(v)) view.adj[v].push_back({u, 1});
    for (const VertexPair& e : g.edges()) view.edge_list.push_back({e.u, e.v, 1});
    view.total = g.edge_count();
    return view;
  }

  static AdjView of(const Multigraph& g) {
    AdjView view;
    view.n = g.vertex_count();
    view.adj.resize(view.n);
    for (int v = 0; v < view.n; ++v) view.adj[v] = g.incident(v);
    view.edge_list = g.edges();
    view.total = g.total_multiplicity();
    return view;
  }

  std::int64_t weighted_degree(int v) const {
    std::int64_t sum = 0;
    for (const auto& [u, t] : adj[v]) sum += t;
    return sum;
  }
};

bool power_within(int base, int expn, std::int64_t limit) {
  std::int64_t acc = 1;
  for (int i = 0; i < expn; ++i) {
    acc *= base;
    if (acc > limit) return false;
  }
  return true;
}

std::int64_t covered_of(const AdjView& g, const Coloring& c) {
  std::int64_t covered = 0;
  for (const auto& e : g.edge_list)
    if (c[e.u] != c[e.v]) covered += e.multiplicity;
  return covered;
}

// ---------------- exact enumeration ----------------

struct ExactSearch {
  const AdjView& g;
  ColorScheme s;
  std::vector<std::int64_t> suffix;  // multiplicity still undecided at depth v
  Coloring cur;
  Coloring best_coloring;
  std::int64_t best = -1;

  ExactSearch(const AdjView& g_, ColorScheme s_) : g(g_), s(s_) {
    suffix.assign(g.n + 1, 0);
    for (const auto& e : g.edge_list) suffix[e.v] += e.multiplicity;
    for (int v = g.n - 1; v >= 0; --v) suffix[v] += suffix[v + 1];
    cur.assign(g.n, 0);
  }

  // Covered multiplicity towards already-assigned neighbors, or -1 when the
  // color is proper and would conflict.
  std::int64_t place(int v, int color) const {
    std::int64_t covered = 0;
    bool proper = s.proper(color);
    for (const auto& [u, t] : g.adj[v]) {
      if (u >= v) continue;
      if (cur[u] == color) {
        if (proper) return -1;
      } else {
        covered += t;
      }
    }
    return covered;
  }

  void dfs(int v, std::int64_t covered) {
    if (v == g.n) {
      if (covered > best) {
        best = covered;
        best_coloring = cur;
      }
      return;
    }
    if (covered + suffix[v] <= best) return;  // cannot strictly beat the incumbent
    for (int color = 0; color < s.k; ++color) {
      std::int64_t gain = place(v, color);
      if (gain < 0) continue;
      cur[v] = color;
      dfs(v + 1, covered + gain);
    }
  }

  SolveOutcome run() {
    if (g.n == 0) return Solution{{}, 0, true, Method::exact};
    // Colors inside the relaxed group (and inside the proper group) are
    // interchangeable, so some optimum colors vertex 0 with the least index
    // of its group; enumerating both group representatives in ascending
    // order keeps the lexicographically smallest optimum reachable first.
    std::vector<int> first_colors{0};
    if (s.r > 0 && s.r < s.k) first_colors.push_back(s.r);
    for (int color : first_colors) {
      cur[0] = color;
      dfs(1, 0);
    }
    if (best < 0) return std::nullopt;
    return Solution{best_coloring, best, true, Method::exact};
  }
};

SolveOutcome exact_impl(const AdjView& g, const ColorScheme& s) {
  validate_scheme(s);
  if (!power_within(s.k, g.n, 100'000'000))
    throw TooLargeError("exact enumeration guard: k^n exceeds 1e8");
  return ExactSearch(g, s).run();
}

// ---------------- greedy ----------------

SolveOutcome greedy_impl(const AdjView& g, const ColorScheme& s) {
  validate_scheme(s);
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.weighted_degree(a) > g.weighted_degree(b);
  });

  Coloring c(g.n, -1);
  for (int v : order) {
    int best_color = -1;
    std::int64_t best_covered = -1;
    for (int color = 0; color < s.k; ++color) {
      std::int64_t covered = 0;
      bool ok = true;
      for (const auto& [u, t] : g.adj[v]) {
        if (c[u] < 0) continue;
        if (c[u] == color) {
          if (s.proper(color)) {
            ok = false;
            break;
          }
        } else {
          covered += t;
        }
      }
      if (ok && covered > best_covered) {
        best_covered = covered;
        best_color = color;
      }
    }
    if (best_color < 0) return std::nullopt;  // only reachable with r = 0
    c[v] = best_color;
  }
  return Solution{c, covered_of(g, c), true, Method::greedy};
}

// ---------------- local search ----------------

double objective_score(const AdjView& g, const Coloring& c, const Objective& obj) {
  switch (obj.kind) {
    case Objective::Kind::covered:
      return -static_cast<double>(covered_of(g, c));
    case Objective::Kind::generalized: {
      if (!(obj.p > 0.0)) throw std::invalid_argument("cost exponent p must be > 0");
      std::vector<std::int64_t> kappa(g.n, 0);
      for (const auto& e : g.edge_list)
        if (c[e.u] == c[e.v]) {
          kappa[e.u] += e.multiplicity;
          kappa[e.v] += e.multiplicity;
        }
      double cost = 0.0;
      for (std::int64_t kv : kappa)
        if (kv > 0) cost += std::pow(static_cast<double>(kv), obj.p);
      return cost;
    }
    case Objective::Kind::defective: {
      std::vector<std::int64_t> kappa(g.n, 0);
      for (const auto& e : g.edge_list)
        if (c[e.u] == c[e.v]) {
          kappa[e.u] += e.multiplicity;
          kappa[e.v] += e.multiplicity;
        }
      std::int64_t worst = 0;
      for (std::int64_t kv : kappa) worst = std::max(worst, kv);
      return static_cast<double>(worst);
    }
  }
  return 0.0;
}

bool move_keeps_feasible(const AdjView& g, const Coloring& c, const ColorScheme& s, int v,
                         int color) {
  if (!s.proper(color)) return true;
  for (const auto& [u, t] : g.adj[v]) {
    (void)t;
    if (c[u] == color) return false;
  }
  return true;
}

// First-improvement sweeps over a seeded shuffle of the vertices until no
// single-vertex recolor improves the objective or the move budget runs out.
void improve_chain(const AdjView& g, const ColorScheme& s, const Objective& obj, Coloring& c,
                   std::int64_t& moves_left, std::mt19937_64& rng) {
  if (g.n == 0) return;
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = g.n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  const double eps = obj.kind == Objective::Kind::generalized ? 1e-12 : 0.0;
  double score = objective_score(g, c, obj);
  bool improved = true;
  while (improved && moves_left > 0) {
    improved = false;
    for (int v : order) {
      if (moves_left <= 0) break;
      int old = c[v];
      for (int color = 0; color < s.k && moves_left > 0; ++color) {
        if (color == old) continue;
        if (!move_keeps_feasible(g, c, s, v, color)) continue;
        c[v] = color;
        double cand = objective_score(g, c, obj);
        if (cand < score - eps) {
          score = cand;
          old = color;
          --moves_left;
          improved = true;
        } else {
          c[v] = old;
        }
      }
    }
  }
}

SolveOutcome local_impl(const AdjView& g, const ColorScheme& s, const Objective& obj,
                        const SearchBudget& budget) {
  SolveOutcome seed = greedy_impl(g, s);
  if (!seed) return std::nullopt;
  const Coloring start = seed->coloring;
  if (budget.max_iterations <= 0)
    return Solution{start, seed->value, true, Method::local_search};

  std::mt19937_64 rng(budget.random_seed);
  std::int64_t moves_left = budget.max_iterations;

  Coloring best = start;
  improve_chain(g, s, obj, best, moves_left, rng);
  double best_score = objective_score(g, best, obj);

  for (int t = 0; t < budget.restarts; ++t) {
    // Random feasibility-preserving walk away from the greedy seed, then
    // descend again; keep the better endpoint.
    Coloring cand = start;
    for (int step = 0; step < g.n; ++step) {
      int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n));
      std::vector<int> options;
      for (int color = 0; color < s.k; ++color)
        if (move_keeps_feasible(g, cand, s, v, color)) options.push_back(color);
      if (!options.empty())
        cand[v] = options[rng() % options.size()];
    }
    improve_chain(g, s, obj, cand, moves_left, rng);
    double cand_score = objective_score(g, cand, obj);
    if (cand_score < best_score) {
      best_score = cand_score;
      best = cand;
    }
  }
  return Solution{best, covered_of(g, best), true, Method::local_search};
}

}  // namespace

SolveOutcome solve_exact(const Graph& g, const ColorScheme& s) {
  return exact_impl(AdjView::of(g), s);
}
SolveOutcome solve_exact(const Multigraph& g, const ColorScheme& s) {
  return exact_impl(AdjView::of(g), s);
}

Solution solve_r12_structural(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 30) throw TooLargeError("structural (1,2) solver guard: n > 30");

  // opt equals the best degree sum over independent sets: the proper class
  // is independent, and with only one relaxed class every covered edge
  // touches it exactly once.
  std::vector<std::int64_t> suffix(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + g.degree(v);

  std::vector<char> chosen(n, 0), best_set(n, 0);
  std::int64_t best = 0;

  auto dfs = [&](auto&& self, int v, std::int64_t sum) -> void {
    if (sum > best) {
      best = sum;
      best_set.assign(chosen.begin(), chosen.end());
    }
    if (v == n) return;
    if (sum + suffix[v] <= best) return;
    bool free = true;
    for (int u : g.neighbors(v))
      if (u < v && chosen[u]) {
        free = false;
        break;
      }
    if (free) {
      chosen[v] = 1;
      self(self, v + 1, sum + g.degree(v));
      chosen[v] = 0;
    }
    self(self, v + 1, sum);
  };
  dfs(dfs, 0, 0);

  Coloring c(n, 0);
  for (int v = 0; v < n; ++v)
    if (best_set[v]) c[v] = 1;  // color 1 is the proper color under (r=1, k=2)
  return Solution{c, best, true, Method::structural12};
}

Solution solve_half_approx(const Graph& g, const ColorScheme& s) {
  validate_scheme(s);
  if (s.r < 2) throw std::invalid_argument("half-approximation requires r >= 2");
  const int n = g.vertex_count();
  Coloring side(n, 0);
  for (int v = 0; v < n; ++v) {
    std::int64_t placed[2] = {0, 0};
    for (int u : g.neighbors(v))
      if (u < v) ++placed[side[u]];
    side[v] = placed[1] < placed[0] ? 1 : 0;  // fewer placed neighbors wins, tie -> 0
  }
  std::int64_t cut = 0;
  for (const VertexPair& e : g.edges())
    if (side[e.u] != side[e.v]) ++cut;
  return Solution{side, cut, true, Method::half_approx};
}

SolveOutcome solve_greedy(const Graph& g, const ColorScheme& s) {
  return greedy_impl(AdjView::of(g), s);
}
SolveOutcome solve_greedy(const Multigraph& g, const ColorScheme& s) {
  return greedy_impl(AdjView::of(g), s);
}

SolveOutcome solve_local_search(const Graph& g, const ColorScheme& s, const Objective& obj,
                                const SearchBudget& budget) {
  return local_impl(AdjView::of(g), s, obj, budget);
}
SolveOutcome solve_local_search(const Multigraph& g, const ColorScheme& s, const Objective& obj,
                                const SearchBudget& budget) {
  return local_impl(AdjView::of(g), s, obj, budget);
}

}  // namespace relaxcol
