#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

enum class RoleKind { C, D, A, B, Apex, T, V1, V2, V3 };

/// Named role of a generated vertex. `index` and `slot` are 1-based; blocks
/// (A, B, V3) use both, singletons only `index`, the apex neither.
struct Role {
  RoleKind kind;
  std::size_t index = 0;
  std::size_t slot = 0;

  /// "C(1)", "D(2)", "A(3,1)", "B(1,2)", "APEX", "T(1)", "V1(2)", "V2(4)", "V3(5,1)".
  std::string to_string() const;
  friend bool operator==(const Role&, const Role&) = default;
};

struct ConstructionLabels {
  std::vector<Role> role_of;  // indexed by vertex

  /// Vertices with the given kind, ascending.
  VertexSet vertices_of(RoleKind kind) const;
  /// Vertices of block `index` of kind A, B or V3, ascending.
  VertexSet block(RoleKind kind, std::size_t index) const;
  Vertex vertex(const Role& role) const;
  /// "role vertex" lines, one per vertex in id order.
  std::string serialize() const;
};

struct Construction {
  Hypergraph hypergraph;
  ConstructionLabels labels;
  std::vector<std::string> warnings;
};

/// C(k,4): c_1..c_5 then d_1..d_{k-3}; edges {c_i, c_{i+1}, c_{i+2}} ∪ D
/// for i = 1..5 (indices mod 5). Requires k >= 3.
Construction build_c_k_4(int k);

/// C(k,ell), ell >= 5: K_ell minus c_1c_2 on c_1..c_ell, each edge extended
/// to a k-set by the first matching rule:
///   c_1 in e, c_2 not in e     -> e ∪ {c_2} ∪ D
///   e = {c_2, c_3}             -> e ∪ {c_4} ∪ D
///   e = {c_2, c_4}             -> e ∪ {c_5} ∪ D
///   c_2 in e, c_1,c_3,c_4 not  -> e ∪ {c_3} ∪ D
///   c_1, c_2 not in e          -> e ∪ {c_1} ∪ D
Construction build_c_k_ell(int k, int ell);

/// Routes ell == 4 to build_c_k_4 and ell >= 5 to build_c_k_ell.
Construction build_c(int k, int ell);

/// |V(C(k, ell))|.
std::size_t core_vertex_count(int k, int ell);

struct SParameters {
  std::size_t a = 0;  // A-blocks of size k-1
  std::size_t b = 0;  // B-blocks of size k-2

  friend bool operator==(const SParameters&, const SParameters&) = default;
};

/// The unique (a, b) with a(k-1) + b(k-2) = n - |V(C)| - 1, 1 <= b <= k-1,
/// a >= 0. Throws std::invalid_argument when n is too small.
SParameters solve_ab(int n, int k, int ell);

struct SConstruction : Construction {
  SParameters params;
};

/// S(n,k,ell): C(k,ell), blocks A_1..A_a, B_1..B_b and apex v, with edges
/// E(C) ∪ {A_i ∪ {c_j}} ∪ {B_i ∪ {v, c_j}} for j = 1..ell-2.
SConstruction build_s(int n, int k, int ell);

/// H(n,k,F): nu = |V(F)| - alpha(F) - 1; V_1 = {v_1..v_nu}, blocks A_i of
/// size k-nu+1 and t spare vertices with a(k-nu+1) + t = n - nu, 0 <= t <
/// k-nu+1. Edges (V_1 ∪ A_i) minus v_j for every block and j.
Construction build_h_min_deg(int n, int k, const Graph& f);

/// H_k(n,a,G,S). S defaults to the lexicographically least minimum feedback
/// set; a supplied S must be a minimum feedback set. Empty hypergraph when
/// G is acyclic. Otherwise V_1 carries a Berge copy of G[S] through
/// degree-one V_2 vertices, and every a-block of V_3 gets C(f, k-a) edges
/// A ∪ (k-a vertices of V_1). The |V_3| mod a leftover vertices stay
/// isolated. Requires 1 <= a <= k and a + f >= k; a == k adds a warning.
Construction build_h_feedback(int n, int k, int a, const Graph& g, std::optional<VertexSet> feedback = {});

}  // namespace bergesat
