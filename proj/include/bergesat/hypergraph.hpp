#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bergesat/types.hpp"

namespace bergesat {

struct VertexSetHash {
  std::size_t operator()(const VertexSet& set) const noexcept;
};

/// A hypergraph on vertices [0, n) whose edges are distinct vertex sets of
/// size >= 2. Edges keep insertion order; each edge is stored sorted.
/// Uniformity is not enforced (see is_k_uniform).
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n);
  /// Throws std::invalid_argument on an edge of size < 2, an endpoint >= n,
  /// a repeated vertex inside an edge, or a duplicate edge.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }

  std::size_t degree(Vertex v) const { return incidence_[v].size(); }
  /// Ids of the edges containing v, ascending.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incidence_[v]; }

  /// Index of `edge` (any vertex order) or nullopt.
  std::optional<std::size_t> find_edge(VertexSet edge) const;
  bool contains_edge(const VertexSet& edge) const { return find_edge(edge).has_value(); }

  /// Edge families compare as sets: order of edges is irrelevant.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  void append(VertexSet edge);

  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

bool is_k_uniform(const Hypergraph& h, std::size_t k);

/// v ⪯ u: every edge containing v also contains u.
bool dominates(const Hypergraph& h, Vertex u, Vertex v);

/// H + e. Throws std::invalid_argument if e is already an edge or |e| < 2.
Hypergraph add_edge(const Hypergraph& h, VertexSet e);

/// Lazy lexicographic enumeration of the k-subsets of [0, n) that are not
/// edges of H (the k-uniform complement).
class MissingEdges {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = VertexSet;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexSet*;
    using reference = const VertexSet&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class MissingEdges;
    iterator(const Hypergraph* h, std::size_t k);
    void skip_present();

    const Hypergraph* h_ = nullptr;
    VertexSet current_;
    bool done_ = true;
  };

  MissingEdges(const Hypergraph& h, std::size_t k) : h_(&h), k_(k) {}
  iterator begin() const { return iterator(h_, k_); }
  iterator end() const { return iterator(); }
  /// C(n,k) minus the number of k-edges of H.
  std::uint64_t size() const;

 private:
  const Hypergraph* h_;
  std::size_t k_;
};

inline MissingEdges missing_edges(const Hypergraph& h, std::size_t k) { return MissingEdges(h, k); }

}  // namespace bergesat
