#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bergesat/types.hpp"

namespace bergesat {

/// Unordered pair stored with first < second.
using GraphEdge = std::pair<Vertex, Vertex>;

/// Simple 2-uniform graph on vertices [0, n). Edges are kept sorted
/// lexicographically. Isolated vertices are allowed here (generators such as
/// the empty graph need them); `normalized()` drops them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : Graph(n, {}) {}
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints >= n.
  Graph(std::size_t n, std::vector<GraphEdge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(std::size_t i) const { return edges_[i]; }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// True when every pair of distinct vertices is adjacent.
  bool is_complete() const;

  /// Copy without isolated vertices, renumbered in ascending order.
  /// `original_ids[new_id]` receives the old id when requested.
  Graph normalized(std::vector<Vertex>* original_ids = nullptr) const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(const VertexSet& vertices) const;

  /// Copy with `removed` deleted (remaining vertices renumbered ascending).
  Graph without(const VertexSet& removed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace bergesat
