#include "bergesat/oracle.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "bergesat/berge.hpp"
#include "bergesat/combinations.hpp"
#include "bergesat/saturation.hpp"

namespace bergesat {
namespace {

class ExhaustiveBerge {
 public:
  ExhaustiveBerge(const Graph& f, const Hypergraph& h, std::optional<std::size_t> required)
      : f_(f), h_(h), required_(required), image_(f.vertex_count()), vertex_used_(h.vertex_count(), false),
        edge_used_(h.edge_count(), false) {}

  bool run() { return place_vertex(0); }

 private:
  bool place_vertex(Vertex x) {
    if (x == f_.vertex_count()) return assign_edge(0, false);
    for (Vertex w = 0; w < h_.vertex_count(); ++w) {
      if (vertex_used_[w]) continue;
      vertex_used_[w] = true;
      image_[x] = w;
      const bool found = place_vertex(x + 1);
      vertex_used_[w] = false;
      if (found) return true;
    }
    return false;
  }

  bool holds(const VertexSet& e, Vertex v) const { return std::find(e.begin(), e.end(), v) != e.end(); }

  bool assign_edge(std::size_t i, bool used_required) {
    if (i == f_.edge_count()) return !required_ || used_required;
    const auto [x, y] = f_.edge(i);
    for (std::size_t id = 0; id < h_.edge_count(); ++id) {
      if (edge_used_[id]) continue;
      const VertexSet& e = h_.edge(id);
      if (!holds(e, image_[x]) || !holds(e, image_[y])) continue;
      edge_used_[id] = true;
      const bool found = assign_edge(i + 1, used_required || (required_ && *required_ == id));
      edge_used_[id] = false;
      if (found) return true;
    }
    return false;
  }

  const Graph& f_;
  const Hypergraph& h_;
  std::optional<std::size_t> required_;
  std::vector<Vertex> image_;
  std::vector<bool> vertex_used_;
  std::vector<bool> edge_used_;
};

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Free and every missing k-edge creates a new Berge-F; stops at the first
// counterexample.
bool saturated_quick(const Hypergraph& h, const Graph& f, std::size_t k) {
  const BergeSearcher searcher(h, f);
  if (searcher.find()) return false;
  for (const auto& e : missing_edges(h, k)) {
    if (!searcher.creates_new(e)) return false;
  }
  return true;
}

// True if no vertex permutation maps `subset` (edge ranks, ascending) to a
// lexicographically smaller rank list.
bool is_orbit_minimum(const std::vector<std::uint64_t>& subset, const std::vector<VertexSet>& all_edges,
                      std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::uint64_t> image(subset.size());
  VertexSet mapped;
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      mapped.clear();
      for (Vertex v : all_edges[subset[i]]) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      image[i] = rank_combination(mapped, n);
    }
    std::sort(image.begin(), image.end());
    if (image < subset) return false;
  }
  return true;
}

}  // namespace

bool berge_oracle(const Graph& f, const Hypergraph& h, std::optional<std::size_t> required_edge) {
  if (f.edge_count() > kOraclePatternEdgeCap || h.edge_count() > kOracleHostEdgeCap) {
    throw CapExceeded("berge_oracle caps: |E(F)| <= 6 and |E(H)| <= 8");
  }
  if (f.vertex_count() > h.vertex_count()) return false;
  if (required_edge && *required_edge >= h.edge_count()) return false;
  return ExhaustiveBerge(f, h, required_edge).run();
}

Hypergraph greedy_saturate(const Hypergraph& h, const Graph& f, std::size_t k, GreedyOrder order) {
  if (!is_k_uniform(h, k)) throw std::invalid_argument("greedy_saturate needs a k-uniform hypergraph");
  if (contains_berge(f, h)) throw std::invalid_argument("greedy_saturate needs a Berge-F-free start");
  std::vector<VertexSet> candidates;
  for (const auto& e : missing_edges(h, k)) candidates.push_back(e);
  switch (order.kind) {
    case GreedyOrder::Kind::lexicographic:
      break;
    case GreedyOrder::Kind::reverse_lexicographic:
      std::reverse(candidates.begin(), candidates.end());
      break;
    case GreedyOrder::Kind::shuffled: {
      std::mt19937_64 rng(order.seed);
      for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[draw_below(rng, i)]);
      break;
    }
  }

  Hypergraph current = h;
  auto searcher = std::make_unique<BergeSearcher>(current, f);
  for (const auto& e : candidates) {
    if (searcher->creates_new(e)) continue;
    std::vector<VertexSet> edges = current.edges();
    edges.push_back(e);
    searcher.reset();
    current = Hypergraph(current.vertex_count(), std::move(edges));
    searcher = std::make_unique<BergeSearcher>(current, f);
  }
  if (!is_saturated(current, f, k).saturated()) throw std::logic_error("greedy result failed saturation check");
  return current;
}

std::optional<SearchResult> min_saturation_search(std::size_t n, std::size_t k, const Graph& f, std::size_t m_max,
                                                  const MinSatOptions& options) {
  if (k < 2 || k > n) throw std::invalid_argument("min_saturation_search needs 2 <= k <= n");
  const std::uint64_t edge_total = binomial(n, k);
  if (edge_total > kMinSatEdgeCap) {
    throw CapExceeded("min_saturation_search cap: C(n,k) <= 25, got " + std::to_string(edge_total));
  }
  if (m_max > kMinSatMaxM) throw CapExceeded("min_saturation_search cap: m_max <= 6");
  if (options.isomorph_reject && n > kIsomorphRejectVertexCap) {
    throw CapExceeded("isomorph rejection cap: n <= 8");
  }

  std::vector<VertexSet> all_edges;
  VertexSet e(k);
  std::iota(e.begin(), e.end(), Vertex{0});
  do {
    all_edges.push_back(e);
  } while (next_combination(e, n));

  SearchResult result;
  for (std::size_t m = 0; m <= std::min<std::size_t>(m_max, all_edges.size()); ++m) {
    std::vector<Vertex> pick(m);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    do {
      std::vector<std::uint64_t> ranks(pick.begin(), pick.end());
      if (options.isomorph_reject && !is_orbit_minimum(ranks, all_edges, n)) continue;
      std::vector<VertexSet> edges;
      for (Vertex i : pick) edges.push_back(all_edges[i]);
      Hypergraph candidate(n, std::move(edges));
      ++result.examined;
      if (saturated_quick(candidate, f, k)) {
        result.m_star = m;
        result.witness = std::move(candidate);
        return result;
      }
    } while (next_combination(pick, all_edges.size()));
  }
  return std::nullopt;
}

}  // namespace bergesat
