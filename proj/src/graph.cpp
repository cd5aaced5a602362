#include "relaxcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace relaxcol {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range, n=" +
                            std::to_string(n));
}

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_pairs(int vertex_count, std::vector<std::pair<int, int>> pairs) {
  Graph g(vertex_count);
  g.edges_.reserve(pairs.size());
  for (auto& [u, v] : pairs) {
    check_vertex(u, vertex_count);
    check_vertex(v, vertex_count);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    throw std::invalid_argument("duplicate edge");
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const VertexPair& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < vertex_count; ++v) g.adj_[v].reserve(deg[v]);
  for (const VertexPair& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, vertex_count());
  check_vertex(v, vertex_count());
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (u > v) std::swap(u, v);
  VertexPair e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e)
    throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  edges_.insert(it, e);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return false;
  if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v, vertex_count());
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, vertex_count());
  return adj_[v];
}

Multigraph::Multigraph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

Multigraph Multigraph::from_graph(const Graph& g) {
  Multigraph mg(g.vertex_count());
  for (const VertexPair& e : g.edges()) mg.add_edge(e.u, e.v, 1);
  return mg;
}

void Multigraph::add_edge(int u, int v, std::int64_t multiplicity) {
  check_vertex(u, vertex_count());
  check_vertex(v, vertex_count());
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
  if (u > v) std::swap(u, v);
  Edge e{u, v, multiplicity};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, const Edge& b) {
                               return a.u < b.u || (a.u == b.u && a.v < b.v);
                             });
  if (it != edges_.end() && it->u == u && it->v == v)
    throw std::invalid_argument("duplicate pair {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  edges_.insert(it, e);
  auto ins = [](std::vector<std::pair<int, std::int64_t>>& list, int w, std::int64_t t) {
    auto pos = std::lower_bound(list.begin(), list.end(), w,
                                [](const auto& a, int b) { return a.first < b; });
    list.insert(pos, {w, t});
  };
  ins(adj_[u], v, multiplicity);
  ins(adj_[v], u, multiplicity);
  total_ += multiplicity;
}

std::int64_t Multigraph::multiplicity(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return 0;
  auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v,
                             [](const auto& a, int b) { return a.first < b; });
  if (it == adj_[u].end() || it->first != v) return 0;
  return it->second;
}

std::int64_t Multigraph::weighted_degree(int v) const {
  check_vertex(v, vertex_count());
  std::int64_t sum = 0;
  for (const auto& [u, t] : adj_[v]) sum += t;
  return sum;
}

const std::vector<std::pair<int, std::int64_t>>& Multigraph::incident(int v) const {
  check_vertex(v, vertex_count());
  return adj_[v];
}

}  // namespace relaxcol
