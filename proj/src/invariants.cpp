#include "bergesat/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>

#include "bergesat/combinations.hpp"

namespace bergesat {
namespace {

using Mask = std::uint64_t;

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                      " vertices, cap is " + std::to_string(cap));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[u] |= Mask{1} << v;
    masks[v] |= Mask{1} << u;
  }
  return masks;
}

void max_independent(const std::vector<Mask>& nbr, Mask candidates, std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  max_independent(nbr, candidates & ~bit & ~nbr[v], size + 1, best);
  max_independent(nbr, candidates & ~bit, size, best);
}

void min_cover(const std::vector<GraphEdge>& edges, Mask cover, std::size_t size, std::size_t& best) {
  if (size >= best) return;
  for (const auto& [u, v] : edges) {
    const Mask bu = Mask{1} << u;
    const Mask bv = Mask{1} << v;
    if ((cover & (bu | bv)) == 0) {
      min_cover(edges, cover | bu, size + 1, best);
      min_cover(edges, cover | bv, size + 1, best);
      return;
    }
  }
  best = size;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

bool acyclic_without(const Graph& g, const std::vector<char>& removed) {
  DisjointSets sets(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    if (removed[u] || removed[v]) continue;
    if (!sets.unite(u, v)) return false;
  }
  return true;
}

}  // namespace

std::size_t independence_number(const Graph& g) {
  require_cap(g, kIndependenceCap, "independence_number");
  const std::size_t n = g.vertex_count();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::size_t best = 0;
  max_independent(neighbor_masks(g), all, 0, best);
  return best;
}

std::size_t vertex_cover_number(const Graph& g) {
  require_cap(g, kIndependenceCap, "vertex_cover_number");
  std::size_t best = g.vertex_count();
  min_cover(g.edges(), 0, 0, best);
  return best;
}

std::optional<std::size_t> girth(const Graph& g) {
  require_cap(g, kGirthCap, "girth");
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(x)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          queue.push(w);
        } else if (parent[x] != w) {
          const std::size_t length = dist[x] + dist[w] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

bool is_acyclic(const Graph& g) { return acyclic_without(g, std::vector<char>(g.vertex_count(), 0)); }

FeedbackSet feedback_number(const Graph& g) {
  require_cap(g, kFeedbackCap, "feedback_number");
  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (std::size_t size = 0; size <= n; ++size) {
    VertexSet subset(size);
    std::iota(subset.begin(), subset.end(), Vertex{0});
    do {
      std::fill(removed.begin(), removed.end(), 0);
      for (Vertex v : subset) removed[v] = 1;
      if (acyclic_without(g, removed)) return {size, subset};
    } while (next_combination(subset, n));
  }
  return {n, {}};  // unreachable: removing every vertex leaves no cycle
}

std::size_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("min_degree of a graph without vertices");
  std::size_t best = SIZE_MAX;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

InvariantReport compute_invariants(const Graph& g) {
  InvariantReport report;
  report.alpha = independence_number(g);
  report.beta = vertex_cover_number(g);
  report.delta = min_degree(g);
  report.girth = girth(g);
  report.feedback = feedback_number(g);
  return report;
}

Graph make_clique(std::size_t ell) {
  if (ell < 2) throw std::invalid_argument("clique needs at least 2 vertices");
  std::vector<GraphEdge> edges;
  for (Vertex u = 0; u < ell; ++u) {
    for (Vertex v = u + 1; v < ell; ++v) edges.emplace_back(u, v);
  }
  return Graph(ell, std::move(edges));
}

Graph make_star(std::size_t ell) {
  if (ell < 2) throw std::invalid_argument("star needs at least 2 leaves");
  std::vector<GraphEdge> edges;
  for (Vertex v = 1; v <= ell; ++v) edges.emplace_back(0, v);
  return Graph(ell + 1, std::move(edges));
}

Graph make_cycle(std::size_t ell) {
  if (ell < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<GraphEdge> edges;
  for (Vertex v = 0; v < ell; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % ell));
  return Graph(ell, std::move(edges));
}

Graph make_path(std::size_t vertices) {
  if (vertices < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<GraphEdge> edges;
  for (Vertex v = 0; v + 1 < vertices; ++v) edges.emplace_back(v, v + 1);
  return Graph(vertices, std::move(edges));
}

Graph make_empty(std::size_t vertices) { return Graph(vertices); }

Graph complete_join(const Graph& f, const Graph& g) {
  const auto shift = static_cast<Vertex>(f.vertex_count());
  std::vector<GraphEdge> edges = f.edges();
  for (const auto& [u, v] : g.edges()) edges.emplace_back(u + shift, v + shift);
  for (Vertex x = 0; x < f.vertex_count(); ++x) {
    for (Vertex y = 0; y < g.vertex_count(); ++y) edges.emplace_back(x, y + shift);
  }
  return Graph(f.vertex_count() + g.vertex_count(), std::move(edges));
}

}  // namespace bergesat
