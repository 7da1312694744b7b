#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// Certificate that H contains a Berge copy of F.
struct BergeWitness {
  /// core_map[x] is the image of F-vertex x; injective.
  std::vector<Vertex> core_map;
  /// edge_map[i] is the id of the hyperedge playing F-edge i (F.edge(i));
  /// pairwise distinct, and each hyperedge contains both endpoint images.
  std::vector<std::size_t> edge_map;

  friend bool operator==(const BergeWitness&, const BergeWitness&) = default;
};

struct SearchConstraints {
  VertexSet required_core;   // must lie in the image of core_map
  VertexSet forbidden_core;  // must avoid the image of core_map
  std::optional<VertexSet> required_edge;  // must be in the image of edge_map
};

/// Berge-F containment search against one fixed hypergraph.
///
/// Core embeddings are enumerated by backtracking (F-vertices by descending
/// degree, host candidates by descending degree, ids breaking ties); a host
/// vertex is a candidate for x only if its degree is at least deg_F(x). Each
/// partial embedding is pruned unless the F-edges between placed vertices
/// can be matched injectively onto containing hyperedges (Hopcroft-Karp).
/// Complete patterns K_m are enumerated as m-subsets instead of ordered
/// injections.
///
/// The searcher keeps references to `h` and `f`; both must outlive it.
/// All const member functions are safe to call concurrently.
class BergeSearcher {
 public:
  BergeSearcher(const Hypergraph& h, const Graph& f);

  std::optional<BergeWitness> find(const SearchConstraints& constraints = {}) const;

  /// Witness for F in H + e that uses e. In the witness, e has edge id
  /// h.edge_count(). `constraints.required_edge` is ignored. Throws
  /// std::invalid_argument if e is already an edge of H or malformed.
  std::optional<BergeWitness> find_new(const VertexSet& e, const SearchConstraints& constraints = {}) const;

  bool creates_new(const VertexSet& e) const { return find_new(e).has_value(); }

  const Hypergraph& hypergraph() const { return h_; }
  const Graph& pattern() const { return f_; }

 private:
  friend class SearchRun;

  const Hypergraph& h_;
  const Graph& f_;
  std::size_t words_;               // 64-bit words per incidence row (one spare bit for an added edge)
  std::vector<std::uint64_t> bits_;  // vertex-major incidence bitsets
  std::vector<Vertex> by_degree_;    // host vertices, degree descending then id
  std::vector<Vertex> pattern_order_;
  bool complete_pattern_;
};

std::optional<BergeWitness> find_berge_witness(const Graph& f, const Hypergraph& h,
                                               const SearchConstraints& constraints = {});

bool contains_berge(const Graph& f, const Hypergraph& h);

/// True iff H + e contains a Berge-F using e. Throws if e is already in H.
bool creates_new_berge(const Hypergraph& h, const VertexSet& e, const Graph& f);

/// True iff adding the 2-edge uv creates a new Berge-K_ell. Throws if uv is
/// already a (2-)edge of H or u == v.
bool is_ell_good(const Hypergraph& h, Vertex u, Vertex v, std::size_t ell);

struct CoreReport {
  std::uint64_t checked = 0;
  std::vector<VertexSet> failures;
  bool ok() const { return failures.empty(); }
};

/// For every m-subset S of V(H), checks that H has a Berge-K_m whose core
/// is exactly S.
CoreReport all_subsets_are_cores(const Hypergraph& h, std::size_t m);

}  // namespace bergesat
