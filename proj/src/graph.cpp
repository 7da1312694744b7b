#include "bergesat/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bergesat {

Graph::Graph(std::size_t n, std::vector<GraphEdge> edges) : n_(n), adjacency_(n) {
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

bool Graph::is_complete() const { return edges_.size() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

Graph Graph::normalized(std::vector<Vertex>* original_ids) const {
  VertexSet kept;
  for (Vertex v = 0; v < n_; ++v) {
    if (!adjacency_[v].empty()) kept.push_back(v);
  }
  if (original_ids) *original_ids = kept;
  return induced(kept);
}

Graph Graph::induced(const VertexSet& vertices) const {
  std::vector<Vertex> position(n_, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<Vertex>(i);
  std::vector<GraphEdge> kept;
  for (const auto& [u, v] : edges_) {
    if (position[u] != static_cast<Vertex>(-1) && position[v] != static_cast<Vertex>(-1)) {
      kept.emplace_back(position[u], position[v]);
    }
  }
  return Graph(vertices.size(), std::move(kept));
}

Graph Graph::without(const VertexSet& removed) const {
  VertexSet kept;
  for (Vertex v = 0; v < n_; ++v) {
    if (!contains_vertex(removed, v)) kept.push_back(v);
  }
  return induced(kept);
}

}  // namespace bergesat
