#pragma once

// Independent reference computations and random instance generators shared
// by the unit and acceptance tests. Nothing here calls the search engine.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat::testing {

using Rng = std::mt19937_64;

std::size_t brute_independence(const Graph& g);

/// Forest test by counting: a graph is a forest iff |E| = |V| - components.
bool brute_forest(const Graph& g);

/// Smallest cycle length by trying every vertex sequence; nullopt if none.
/// Small graphs only.
std::optional<std::size_t> brute_girth(const Graph& g);

/// Subsets of [0,n) of size k not in `present`, counted by enumeration.
std::uint64_t brute_missing_count(const Hypergraph& h, std::size_t k);

/// Berge containment by listing every injective edge assignment and then
/// checking that the union of constraints is realisable by an injective
/// vertex map. Independent of both the engine and the oracle.
bool brute_berge(const Graph& f, const Hypergraph& h);

/// Smallest a >= 0 with some 1 <= b <= k-1 and a(k-1) + b(k-2) = target.
struct AbSolution {
  long a = -1;
  long b = -1;
};
AbSolution brute_ab(long target, long k);

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size);
Hypergraph random_uniform(Rng& rng, std::size_t n, std::size_t m, std::size_t k);
Graph random_graph(Rng& rng, std::size_t n, double p);

/// K_2, K_3, P_3, P_4, C_4, K_4 minus an edge.
std::vector<std::pair<std::string, Graph>> small_patterns();

std::size_t choose(std::size_t n, std::size_t k);

}  // namespace bergesat::testing
