#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace bergesat::testing {

std::size_t brute_independence(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (const auto& [u, v] : g.edges()) {
      if ((mask >> u & 1) && (mask >> v & 1)) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

bool brute_forest(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return g.edge_count() + components == n;
}

std::optional<std::size_t> brute_girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  std::vector<bool> on_path(n, false);
  std::function<void(Vertex, Vertex, std::size_t)> walk = [&](Vertex start, Vertex x, std::size_t length) {
    for (Vertex y : g.neighbors(x)) {
      if (y == start && length >= 3) {
        if (!best || length < *best) best = length;
      } else if (y > start && !on_path[y]) {
        on_path[y] = true;
        walk(start, y, length + 1);
        on_path[y] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s, 1);
    on_path[s] = false;
  }
  return best;
}

std::uint64_t brute_missing_count(const Hypergraph& h, std::size_t k) {
  const std::size_t n = h.vertex_count();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    VertexSet e;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) e.push_back(v);
    }
    if (!h.contains_edge(e)) ++count;
  }
  return count;
}

namespace {

bool realise_vertices(const Graph& f, const std::vector<std::vector<Vertex>>& allowed, std::size_t x,
                      std::set<Vertex>& used) {
  if (x == f.vertex_count()) return true;
  for (Vertex w : allowed[x]) {
    if (used.count(w)) continue;
    used.insert(w);
    if (realise_vertices(f, allowed, x + 1, used)) return true;
    used.erase(w);
  }
  return false;
}

bool assign(const Graph& f, const Hypergraph& h, std::size_t i, std::vector<std::size_t>& chosen,
            std::vector<bool>& taken) {
  if (i == f.edge_count()) {
    // Candidate images of x: vertices of every hyperedge assigned to an
    // F-edge at x.
    std::vector<std::vector<Vertex>> allowed(f.vertex_count());
    for (Vertex x = 0; x < f.vertex_count(); ++x) {
      std::vector<Vertex> cand(h.vertex_count());
      std::iota(cand.begin(), cand.end(), Vertex{0});
      for (std::size_t j = 0; j < f.edge_count(); ++j) {
        const auto [a, b] = f.edge(j);
        if (a != x && b != x) continue;
        const VertexSet& e = h.edge(chosen[j]);
        std::vector<Vertex> next;
        std::set_intersection(cand.begin(), cand.end(), e.begin(), e.end(), std::back_inserter(next));
        cand = std::move(next);
      }
      allowed[x] = std::move(cand);
    }
    std::set<Vertex> used;
    return realise_vertices(f, allowed, 0, used);
  }
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    if (taken[id]) continue;
    taken[id] = true;
    chosen[i] = id;
    if (assign(f, h, i + 1, chosen, taken)) return true;
    taken[id] = false;
  }
  return false;
}

}  // namespace

bool brute_berge(const Graph& f, const Hypergraph& h) {
  if (f.vertex_count() > h.vertex_count() || f.edge_count() > h.edge_count()) return false;
  std::vector<std::size_t> chosen(f.edge_count());
  std::vector<bool> taken(h.edge_count(), false);
  return assign(f, h, 0, chosen, taken);
}

AbSolution brute_ab(long target, long k) {
  for (long a = 0; a * (k - 1) <= target; ++a) {
    for (long b = 1; b <= k - 1; ++b) {
      if (a * (k - 1) + b * (k - 2) == target) return {a, b};
    }
  }
  return {};
}

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size) {
  std::set<VertexSet> edges;
  std::uniform_int_distribution<std::size_t> size_dist(min_size, std::min(max_size, n));
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t attempt = 0; edges.size() < m && attempt < 50 * m + 50; ++attempt) {
    std::shuffle(all.begin(), all.end(), rng);
    VertexSet e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    std::sort(e.begin(), e.end());
    edges.insert(std::move(e));
  }
  return Hypergraph(n, std::vector<VertexSet>(edges.begin(), edges.end()));
}

Hypergraph random_uniform(Rng& rng, std::size_t n, std::size_t m, std::size_t k) {
  return random_hypergraph(rng, n, m, k, k);
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<GraphEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<std::pair<std::string, Graph>> small_patterns() {
  return {
      {"K2", Graph(2, {{0, 1}})},
      {"K3", Graph(3, {{0, 1}, {1, 2}, {0, 2}})},
      {"P3", Graph(3, {{0, 1}, {1, 2}})},
      {"P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"K4-e", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})},
  };
}

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace bergesat::testing
