#include "bergesat/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bergesat/combinations.hpp"
#include "bergesat/invariants.hpp"

namespace bergesat {
namespace {

// Hands out vertex ids in creation order and records their roles.
class LabelledBuilder {
 public:
  Vertex add(Role role) {
    labels_.role_of.push_back(role);
    return static_cast<Vertex>(labels_.role_of.size() - 1);
  }
  VertexSet add_block(RoleKind kind, std::size_t index, std::size_t size) {
    VertexSet block;
    for (std::size_t s = 1; s <= size; ++s) block.push_back(add({kind, index, s}));
    return block;
  }
  void edge(VertexSet e) { edges_.push_back(std::move(e)); }
  std::size_t size() const { return labels_.role_of.size(); }

  Construction finish(std::size_t n) {
    if (labels_.role_of.size() != n) throw std::logic_error("construction vertex count mismatch");
    return Construction{Hypergraph(n, std::move(edges_)), std::move(labels_), {}};
  }

 private:
  ConstructionLabels labels_;
  std::vector<VertexSet> edges_;
};

VertexSet join(VertexSet base, const VertexSet& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  std::sort(base.begin(), base.end());
  return base;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// c-vertices then d-vertices; returns (c ids, D).
std::pair<std::vector<Vertex>, VertexSet> core_vertices(LabelledBuilder& b, int c_count, int k) {
  std::vector<Vertex> c;
  for (int i = 1; i <= c_count; ++i) c.push_back(b.add({RoleKind::C, static_cast<std::size_t>(i)}));
  VertexSet d;
  for (int j = 1; j <= k - 3; ++j) d.push_back(b.add({RoleKind::D, static_cast<std::size_t>(j)}));
  return {c, d};
}

void add_c_k_4_edges(LabelledBuilder& b, const std::vector<Vertex>& c, const VertexSet& d) {
  for (int i = 0; i < 5; ++i) b.edge(join({c[i], c[(i + 1) % 5], c[(i + 2) % 5]}, d));
}

void add_c_k_ell_edges(LabelledBuilder& b, const std::vector<Vertex>& c, const VertexSet& d) {
  const std::size_t ell = c.size();
  // c[0] is c_1, c[1] is c_2, ...
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = i + 1; j < ell; ++j) {
      if (i == 0 && j == 1) continue;
      const bool has1 = i == 0;
      const bool has2 = i == 1 || j == 1;
      const bool has3 = i == 2 || j == 2;
      const bool has4 = i == 3 || j == 3;
      Vertex third;
      if (has1 && !has2) {
        third = c[1];
      } else if (i == 1 && j == 2) {
        third = c[3];
      } else if (i == 1 && j == 3) {
        third = c[4];
      } else if (!has1 && has2 && !has3 && !has4) {
        third = c[2];
      } else {
        third = c[0];  // c_1, c_2 both absent
      }
      b.edge(join({c[i], c[j], third}, d));
    }
  }
}

}  // namespace

std::string Role::to_string() const {
  auto one = [this](const char* name) { return std::string(name) + "(" + std::to_string(index) + ")"; };
  auto two = [this](const char* name) {
    return std::string(name) + "(" + std::to_string(index) + "," + std::to_string(slot) + ")";
  };
  switch (kind) {
    case RoleKind::C: return one("C");
    case RoleKind::D: return one("D");
    case RoleKind::A: return two("A");
    case RoleKind::B: return two("B");
    case RoleKind::Apex: return "APEX";
    case RoleKind::T: return one("T");
    case RoleKind::V1: return one("V1");
    case RoleKind::V2: return one("V2");
    case RoleKind::V3: return two("V3");
  }
  return "?";
}

VertexSet ConstructionLabels::vertices_of(RoleKind kind) const {
  VertexSet out;
  for (Vertex v = 0; v < role_of.size(); ++v) {
    if (role_of[v].kind == kind) out.push_back(v);
  }
  return out;
}

VertexSet ConstructionLabels::block(RoleKind kind, std::size_t index) const {
  VertexSet out;
  for (Vertex v = 0; v < role_of.size(); ++v) {
    if (role_of[v].kind == kind && role_of[v].index == index) out.push_back(v);
  }
  return out;
}

Vertex ConstructionLabels::vertex(const Role& role) const {
  auto it = std::find(role_of.begin(), role_of.end(), role);
  if (it == role_of.end()) throw std::out_of_range("no vertex with role " + role.to_string());
  return static_cast<Vertex>(it - role_of.begin());
}

std::string ConstructionLabels::serialize() const {
  std::string out;
  for (Vertex v = 0; v < role_of.size(); ++v) out += role_of[v].to_string() + ' ' + std::to_string(v) + '\n';
  return out;
}

std::size_t core_vertex_count(int k, int ell) {
  return ell == 4 ? static_cast<std::size_t>(k + 2) : static_cast<std::size_t>(k + ell - 3);
}

Construction build_c_k_4(int k) {
  require(k >= 3, "C(k,4) needs k >= 3");
  LabelledBuilder b;
  auto [c, d] = core_vertices(b, 5, k);
  add_c_k_4_edges(b, c, d);
  return b.finish(b.size());
}

Construction build_c_k_ell(int k, int ell) {
  require(k >= 3, "C(k,ell) needs k >= 3");
  require(ell >= 5, "C(k,ell) with this rule set needs ell >= 5");
  LabelledBuilder b;
  auto [c, d] = core_vertices(b, ell, k);
  add_c_k_ell_edges(b, c, d);
  return b.finish(b.size());
}

Construction build_c(int k, int ell) {
  require(ell >= 4, "C(k,ell) needs ell >= 4");
  return ell == 4 ? build_c_k_4(k) : build_c_k_ell(k, ell);
}

SParameters solve_ab(int n, int k, int ell) {
  require(k >= 3 && ell >= 4, "S(n,k,ell) needs k >= 3 and ell >= 4");
  const long long rest = static_cast<long long>(n) - static_cast<long long>(core_vertex_count(k, ell)) - 1;
  const long long m = k - 1;
  // b(k-2) ≡ -b (mod k-1), so b ≡ -rest (mod k-1).
  long long b = ((-rest) % m + m) % m;
  if (b == 0) b = m;
  const long long remainder = rest - b * (k - 2);
  if (rest < 0 || remainder < 0) {
    throw std::invalid_argument("n = " + std::to_string(n) + " is too small for S(n," + std::to_string(k) + "," +
                                std::to_string(ell) + ")");
  }
  return {static_cast<std::size_t>(remainder / m), static_cast<std::size_t>(b)};
}

SConstruction build_s(int n, int k, int ell) {
  const SParameters p = solve_ab(n, k, ell);
  LabelledBuilder b;
  auto [c, d] = core_vertices(b, ell == 4 ? 5 : ell, k);
  if (ell == 4) {
    add_c_k_4_edges(b, c, d);
  } else {
    add_c_k_ell_edges(b, c, d);
  }
  std::vector<VertexSet> a_blocks;
  for (std::size_t i = 1; i <= p.a; ++i) a_blocks.push_back(b.add_block(RoleKind::A, i, k - 1));
  std::vector<VertexSet> b_blocks;
  for (std::size_t i = 1; i <= p.b; ++i) b_blocks.push_back(b.add_block(RoleKind::B, i, k - 2));
  const Vertex apex = b.add({RoleKind::Apex});
  for (const auto& block : a_blocks) {
    for (int j = 0; j < ell - 2; ++j) b.edge(join(block, {c[j]}));
  }
  for (const auto& block : b_blocks) {
    for (int j = 0; j < ell - 2; ++j) b.edge(join(block, {apex, c[j]}));
  }
  SConstruction out;
  static_cast<Construction&>(out) = b.finish(static_cast<std::size_t>(n));
  out.params = p;
  return out;
}

Construction build_h_min_deg(int n, int k, const Graph& f) {
  require(k >= 3, "H(n,k,F) needs k >= 3");
  const std::size_t alpha = independence_number(f);
  require(f.vertex_count() >= alpha + 2, "H(n,k,F) needs |V(F)| >= alpha(F) + 2");
  const std::size_t nu = f.vertex_count() - alpha - 1;
  require(static_cast<std::size_t>(k) > nu, "H(n,k,F) needs k > |V(F)| - alpha(F) - 1");
  require(static_cast<std::size_t>(n) >= nu, "n too small for H(n,k,F)");
  const std::size_t block_size = static_cast<std::size_t>(k) - nu + 1;
  const std::size_t a = (static_cast<std::size_t>(n) - nu) / block_size;
  const std::size_t t = (static_cast<std::size_t>(n) - nu) % block_size;

  LabelledBuilder b;
  VertexSet v1;
  for (std::size_t j = 1; j <= nu; ++j) v1.push_back(b.add({RoleKind::V1, j}));
  std::vector<VertexSet> blocks;
  for (std::size_t i = 1; i <= a; ++i) blocks.push_back(b.add_block(RoleKind::A, i, block_size));
  for (std::size_t s = 1; s <= t; ++s) b.add({RoleKind::T, s});
  for (const auto& block : blocks) {
    for (std::size_t j = 0; j < nu; ++j) {
      VertexSet rest;
      for (std::size_t q = 0; q < nu; ++q) {
        if (q != j) rest.push_back(v1[q]);
      }
      b.edge(join(block, rest));
    }
  }
  Construction out = b.finish(static_cast<std::size_t>(n));
  if (a == 0) out.warnings.push_back("n leaves no A-block; the hypergraph is empty");
  return out;
}

Construction build_h_feedback(int n, int k, int a, const Graph& g, std::optional<VertexSet> feedback) {
  require(k >= 3, "H_k(n,a,G,S) needs k >= 3");
  require(n >= 0, "n must be nonnegative");
  VertexSet s;
  const FeedbackSet minimum = feedback_number(g);
  if (feedback) {
    s = *feedback;
    require(canonicalize(s), "feedback set repeats a vertex");
    require(s.empty() || s.back() < g.vertex_count(), "feedback set vertex out of range");
    require(is_acyclic(g.without(s)), "supplied set is not a feedback set");
    require(s.size() == minimum.size, "supplied feedback set is not minimum");
  } else {
    s = minimum.vertices;
  }
  const std::size_t f = s.size();
  if (f == 0) {
    LabelledBuilder b;
    for (int i = 1; i <= n; ++i) b.add({RoleKind::T, static_cast<std::size_t>(i)});
    return b.finish(static_cast<std::size_t>(n));
  }
  require(a >= 1 && a <= k, "H_k(n,a,G,S) needs 1 <= a <= k");
  require(static_cast<std::size_t>(a) + f >= static_cast<std::size_t>(k), "H_k(n,a,G,S) needs a + f(G) >= k");

  const Graph inner = g.induced(s);
  const std::size_t ell = inner.edge_count();
  const std::size_t v2_size = static_cast<std::size_t>(k - 2) * ell;
  require(static_cast<std::size_t>(n) >= f + v2_size + static_cast<std::size_t>(a),
          "n too small for H_k(n,a,G,S): need room for V_1, V_2 and one a-block");
  const std::size_t v3_size = static_cast<std::size_t>(n) - f - v2_size;
  const std::size_t blocks = v3_size / static_cast<std::size_t>(a);
  const std::size_t leftover = v3_size % static_cast<std::size_t>(a);

  LabelledBuilder b;
  VertexSet v1;
  for (std::size_t j = 1; j <= f; ++j) v1.push_back(b.add({RoleKind::V1, j}));
  VertexSet v2;
  for (std::size_t s2 = 1; s2 <= v2_size; ++s2) v2.push_back(b.add({RoleKind::V2, s2}));
  std::vector<VertexSet> v3_blocks;
  for (std::size_t i = 1; i <= blocks; ++i) {
    v3_blocks.push_back(b.add_block(RoleKind::V3, i, static_cast<std::size_t>(a)));
  }
  for (std::size_t s3 = 1; s3 <= leftover; ++s3) b.add({RoleKind::T, s3});

  // V_1 vertex j plays S[j]; each G[S] edge takes the next k-2 V_2 vertices.
  std::size_t next_v2 = 0;
  for (const auto& [x, y] : inner.edges()) {
    VertexSet e{v1[x], v1[y]};
    for (int q = 0; q < k - 2; ++q) e.push_back(v2[next_v2++]);
    b.edge(join(std::move(e), {}));
  }
  const std::size_t pick = static_cast<std::size_t>(k - a);
  for (const auto& block : v3_blocks) {
    VertexSet chosen(pick);
    for (std::size_t q = 0; q < pick; ++q) chosen[q] = static_cast<Vertex>(q);
    do {
      VertexSet e = block;
      for (Vertex q : chosen) e.push_back(v1[q]);
      b.edge(join(std::move(e), {}));
    } while (next_combination(chosen, f));
  }
  Construction out = b.finish(static_cast<std::size_t>(n));
  if (a == k) {
    out.warnings.push_back("a = k: outside the range 1 <= a <= k-1");
  }
  return out;
}

}  // namespace bergesat
