#include "bergesat/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bergesat/combinations.hpp"

namespace bergesat {

std::size_t VertexSetHash::operator()(const VertexSet& set) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Vertex v : set) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Hypergraph::Hypergraph(std::size_t n) : n_(n), incidence_(n) {}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : Hypergraph(n) {
  edges_.reserve(edges.size());
  for (auto& e : edges) append(std::move(e));
}

void Hypergraph::append(VertexSet edge) {
  if (!canonicalize(edge)) {
    throw std::invalid_argument("edge " + format_vertex_set(edge) + " repeats a vertex");
  }
  if (edge.size() < 2) throw std::invalid_argument("edge of size < 2");
  if (edge.back() >= n_) {
    throw std::invalid_argument("edge " + format_vertex_set(edge) + " has a vertex >= n = " +
                                std::to_string(n_));
  }
  const std::size_t id = edges_.size();
  if (!index_.emplace(edge, id).second) {
    throw std::invalid_argument("duplicate edge " + format_vertex_set(edge));
  }
  for (Vertex v : edge) incidence_[v].push_back(id);
  edges_.push_back(std::move(edge));
}

std::optional<std::size_t> Hypergraph::find_edge(VertexSet edge) const {
  std::sort(edge.begin(), edge.end());
  auto it = index_.find(edge);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (const auto& e : a.edges_) {
    if (!b.index_.contains(e)) return false;
  }
  return true;
}

bool is_k_uniform(const Hypergraph& h, std::size_t k) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [k](const VertexSet& e) { return e.size() == k; });
}

bool dominates(const Hypergraph& h, Vertex u, Vertex v) {
  for (std::size_t id : h.incident_edges(v)) {
    if (!contains_vertex(h.edge(id), u)) return false;
  }
  return true;
}

Hypergraph add_edge(const Hypergraph& h, VertexSet e) {
  std::vector<VertexSet> edges = h.edges();
  edges.push_back(std::move(e));
  return Hypergraph(h.vertex_count(), std::move(edges));
}

MissingEdges::iterator::iterator(const Hypergraph* h, std::size_t k) : h_(h) {
  if (k == 0 || k > h->vertex_count()) return;
  current_.resize(k);
  for (std::size_t i = 0; i < k; ++i) current_[i] = static_cast<Vertex>(i);
  done_ = false;
  skip_present();
}

void MissingEdges::iterator::skip_present() {
  while (!done_ && h_->contains_edge(current_)) {
    done_ = !next_combination(current_, h_->vertex_count());
  }
}

MissingEdges::iterator& MissingEdges::iterator::operator++() {
  done_ = !next_combination(current_, h_->vertex_count());
  skip_present();
  return *this;
}

std::uint64_t MissingEdges::size() const {
  if (k_ == 0 || k_ > h_->vertex_count()) return 0;
  std::uint64_t present = 0;
  for (const auto& e : h_->edges()) present += e.size() == k_ ? 1 : 0;
  return binomial(h_->vertex_count(), k_) - present;
}

}  // namespace bergesat
