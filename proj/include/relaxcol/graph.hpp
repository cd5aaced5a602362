#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace relaxcol {

struct VertexPair {
  int u = 0, v = 0;  // normalized: u < v
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Simple undirected graph on dense 0-based vertex ids.
// No self-loops, no duplicate edges; isolated vertices allowed.
// Edge and neighbor lists are always kept sorted; use from_pairs for bulk
// construction, add_edge for incremental building.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  static Graph from_pairs(int vertex_count, std::vector<std::pair<int, int>> pairs);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;                // sorted
  const std::vector<VertexPair>& edges() const { return edges_; }  // sorted by (u, v)

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<VertexPair> edges_;
};

// Undirected multigraph: each vertex pair carries a positive multiplicity
// (the number of parallel edges between the two endpoints).
class Multigraph {
 public:
  struct Edge {
    int u = 0, v = 0;  // u < v
    std::int64_t multiplicity = 1;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  static Multigraph from_graph(const Graph& g);

  void add_edge(int u, int v, std::int64_t multiplicity = 1);
  std::int64_t multiplicity(int u, int v) const;  // 0 when the pair is absent

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t pair_count() const { return static_cast<std::int64_t>(edges_.size()); }
  std::int64_t total_multiplicity() const { return total_; }
  std::int64_t weighted_degree(int v) const;
  const std::vector<Edge>& edges() const { return edges_; }  // sorted by (u, v)
  const std::vector<std::pair<int, std::int64_t>>& incident(int v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
  std::vector<Edge> edges_;
  std::int64_t total_ = 0;
};

}  // namespace relaxcol
