// Acceptance suite: one PASS/FAIL line per criterion. A criterion passes only
// if every check holds and it finishes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "bergesat/berge.hpp"
#include "bergesat/combinations.hpp"
#include "bergesat/constructions.hpp"
#include "bergesat/invariants.hpp"
#include "bergesat/oracle.hpp"
#include "bergesat/saturation.hpp"
#include "bergesat/witness.hpp"
#include "support.hpp"

using namespace bergesat;
using bergesat::testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) detail << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed <= limit_s;
  if (!in_time) out.detail << "over time limit; ";
  const bool pass = out.ok && in_time;
  failures += !pass;
  std::printf("[%s] %2d %s (%.2f s, limit %.0f s) %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), elapsed, limit_s,
              out.detail.str().c_str());
  std::fflush(stdout);
}

std::string str(std::uint64_t v) { return std::to_string(v); }

bool s_saturated(int n, int k, int ell, Outcome& out, unsigned jobs = 1) {
  const SConstruction s = build_s(n, k, ell);
  SaturationOptions o;
  o.jobs = jobs;
  const SaturationReport r = is_saturated(s.hypergraph, make_clique(ell), k, o);
  const std::uint64_t expected = binomial(n, k) - s.hypergraph.edge_count();
  out.check(r.checked_missing == expected, "S(" + str(n) + ") probed " + str(r.checked_missing));
  out.check(r.saturated(), "S(" + str(n) + "," + str(k) + "," + str(ell) + ") not saturated");
  out.detail << "S(" << n << "," << k << "," << ell << "): " << r.checked_missing << " missing probed, "
             << r.violations_sat.size() << " violations; ";
  return r.saturated();
}

// Rewrites H so that every edge containing v also contains u, keeping it
// 3-uniform and duplicate-free.
Hypergraph force_dominance(const Hypergraph& h, Vertex u, Vertex v, Rng& rng) {
  std::set<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if (contains_vertex(e, v) && !contains_vertex(e, u)) {
      std::vector<std::size_t> replaceable;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != v) replaceable.push_back(i);
      e[replaceable[rng() % replaceable.size()]] = u;
      std::sort(e.begin(), e.end());
    }
    edges.insert(e);
  }
  return Hypergraph(h.vertex_count(), std::vector<VertexSet>(edges.begin(), edges.end()));
}

}  // namespace

int main() {
  criterion(1, "C(k,4) construction fidelity", 1, [](Outcome& out) {
    for (int k = 3; k <= 5; ++k) {
      const Hypergraph h = build_c_k_4(k).hypergraph;
      out.check(h.edge_count() == 5, "k=" + str(k) + " edge count");
      out.check(h.vertex_count() == static_cast<std::size_t>(k) + 2, "k=" + str(k) + " vertex count");
    }
    // {123,234,345,451,512} with c_i -> vertex i-1.
    const Hypergraph tight(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    out.check(build_c_k_4(3).hypergraph == tight, "k=3 is not the tight cycle");
    out.detail << "k=3,4,5 give 5 edges on k+2 vertices; C(3,4) = tight cycle";
  });

  criterion(2, "C(k,4): pairs 4-good, triples are Berge-K3 cores", 5, [](Outcome& out) {
    for (int k = 3; k <= 5; ++k) {
      const Hypergraph h = build_c_k_4(k).hypergraph;
      const PairReport p = all_pairs_good(h, 4);
      const CoreReport c = all_cores_present(h, 4);
      out.check(p.ok() && p.checked == bergesat::testing::choose(k + 2, 2), "pairs k=" + str(k));
      out.check(c.ok() && c.checked == bergesat::testing::choose(k + 2, 3), "cores k=" + str(k));
      out.detail << "k=" << k << ": " << p.checked - p.failures.size() << "/" << p.checked << " pairs, "
                 << c.checked - c.failures.size() << "/" << c.checked << " triples; ";
    }
  });

  criterion(3, "C(k,ell>=5): pairs ell-good, (ell-1)-sets are cores, sizes", 60, [](Outcome& out) {
    for (int k : {3, 4}) {
      for (int ell : {5, 6}) {
        const Hypergraph h = build_c_k_ell(k, ell).hypergraph;
        const std::size_t v = h.vertex_count();
        out.check(h.edge_count() == bergesat::testing::choose(ell, 2) - 1, "edge count");
        out.check(v == static_cast<std::size_t>(k + ell - 3), "vertex count");
        const PairReport p = all_pairs_good(h, ell);
        const CoreReport c = all_cores_present(h, ell);
        out.check(p.ok() && p.checked == bergesat::testing::choose(v, 2), "pairs");
        out.check(c.ok() && c.checked == bergesat::testing::choose(v, ell - 1), "cores");
        out.detail << "(" << k << "," << ell << "): |E|=" << h.edge_count() << " |V|=" << v << " pairs "
                   << p.checked - p.failures.size() << "/" << p.checked << " cores " << c.checked - c.failures.size()
                   << "/" << c.checked << "; ";
      }
    }
  });

  criterion(4, "S(360,3,4) is Berge-K4-saturated (full, jobs 8; orbit pass < 60 s)", 1800 + 60, [](Outcome& out) {
    const auto full_start = std::chrono::steady_clock::now();
    s_saturated(360, 3, 4, out, 8);
    const double full_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - full_start).count();
    out.check(full_s <= 1800, "full pass over 1800 s");

    const auto orbit_start = std::chrono::steady_clock::now();
    const Hypergraph s = build_s(360, 3, 4).hypergraph;
    SaturationOptions o;
    o.mode = SaturationMode::orbits();
    const SaturationReport r = is_saturated(s, make_clique(4), 3, o);
    const double orbit_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - orbit_start).count();
    out.check(r.no_violation_found(), "orbit representative failed");
    out.check(orbit_s <= 60, "orbit pass over 60 s");
    char timing[96];
    std::snprintf(timing, sizeof timing, "full %.1f s; orbits %.1f s: ", full_s, orbit_s);
    out.detail << timing << r.vertex_classes << " vertex classes, " << r.orbit_count
               << " representatives, no violation";
  });

  criterion(5, "S(n,k,ell) small instances saturated (full)", 120, [](Outcome& out) {
    s_saturated(20, 3, 4, out);
    s_saturated(21, 3, 4, out);
    s_saturated(30, 3, 4, out);
    s_saturated(50, 4, 5, out);
  });

  criterion(6, "Edge-count formulas of S", 10, [](Outcome& out) {
    int built = 0;
    for (int n = 10; n <= 200; ++n) {
      SConstruction s;
      try {
        s = build_s(n, 3, 4);
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++built;
      const std::size_t want = n % 2 ? n : n + 1;
      out.check(s.hypergraph.edge_count() == want, "k=3 ell=4 n=" + str(n));
    }
    int grid = 0;
    for (int k = 3; k <= 5; ++k) {
      for (int ell = 4; ell <= 6; ++ell) {
        const int base = 10 * k * k * ell;
        for (int n = base; n <= base + 20; ++n) {
          const std::size_t e = build_s(n, k, ell).hypergraph.edge_count();
          // (k-1)|E| <= (ell-2) n + (k-1)(C(ell,2) - 1), exact in integers.
          const std::size_t lhs = (k - 1) * e;
          const std::size_t rhs = (ell - 2) * n + (k - 1) * (bergesat::testing::choose(ell, 2) - 1);
          out.check(lhs <= rhs, "bound at n=" + str(n) + " k=" + str(k) + " ell=" + str(ell));
          ++grid;
        }
      }
    }
    out.detail << built << " parity checks in [10,200], " << grid << " bound checks";
  });

  criterion(7, "sat_3(n, Berge-K3) = ceil((n-1)/2) for n = 4,5,6", 300, [](Outcome& out) {
    for (std::size_t n : {4u, 5u, 6u}) {
      const auto r = min_saturation_search(n, 3, make_clique(3), 6);
      const std::size_t want = n / 2;  // ceil((n-1)/2)
      out.check(r && r->m_star == want, "n=" + str(n));
      if (r) out.detail << "n=" << n << ": m*=" << r->m_star << " (" << r->examined << " subsets); ";
    }
  });

  criterion(8, "Engine agrees with exhaustive oracle on 500 instances", 120, [](Outcome& out) {
    Rng rng(2024);
    const auto patterns = bergesat::testing::small_patterns();
    int positives = 0, disagreements = 0;
    for (int i = 0; i < 500; ++i) {
      const auto& [name, f] = patterns[rng() % patterns.size()];
      const std::size_t n = 3 + rng() % 7;
      const std::size_t m = 1 + rng() % 7;
      const Hypergraph h = bergesat::testing::random_hypergraph(rng, n, m, 2, 4);
      const bool engine = contains_berge(f, h);
      positives += engine;
      const bool agree = engine == berge_oracle(f, h);
      disagreements += !agree;
      out.check(agree, "instance " + str(i) + " F=" + name);
    }
    out.detail << "500 instances, " << positives << " contain F, " << disagreements << " disagreements";
  });

  criterion(9, "Dominance transfers new copies and cores (300 instances)", 120, [](Outcome& out) {
    Rng rng(9);
    const auto patterns = bergesat::testing::small_patterns();
    int first_premises = 0, second_premises = 0, counterexamples = 0;
    for (int i = 0; i < 300;) {
      const std::size_t n = 5 + rng() % 4;
      const Hypergraph raw = bergesat::testing::random_uniform(rng, n, 2 + rng() % 6, 3);
      const Vertex u = static_cast<Vertex>(rng() % n);
      const Vertex v = static_cast<Vertex>((u + 1 + rng() % (n - 1)) % n);
      const Hypergraph h = force_dominance(raw, u, v, rng);
      const auto& [name, f] = patterns[rng() % patterns.size()];
      if (!dominates(h, u, v) || f.vertex_count() > n) continue;

      // A missing triple e through v whose shifted copy e' is also missing.
      std::vector<std::pair<VertexSet, VertexSet>> choices;
      for (const auto& e : missing_edges(h, 3)) {
        if (!contains_vertex(e, v)) continue;
        VertexSet shifted = e;
        if (!contains_vertex(e, u)) {
          std::replace(shifted.begin(), shifted.end(), v, u);
          std::sort(shifted.begin(), shifted.end());
        }
        if (!h.contains_edge(shifted)) choices.emplace_back(e, shifted);
      }
      if (choices.empty()) continue;
      const auto& [e, shifted] = choices[rng() % choices.size()];
      ++i;

      const BergeSearcher searcher(h, f);
      SearchConstraints avoid_u;
      avoid_u.forbidden_core = {u};
      if (searcher.find_new(e, avoid_u)) {
        ++first_premises;
        const bool held = searcher.creates_new(shifted);
        counterexamples += !held;
        out.check(held, "shifted edge, instance " + str(i) + " F=" + name);
      }

      SearchConstraints through_v;
      through_v.required_core = {v};
      through_v.forbidden_core = {u};
      if (const auto w = searcher.find(through_v)) {
        ++second_premises;
        VertexSet core;
        for (Vertex x : w->core_map) core.push_back(x == v ? u : x);
        std::sort(core.begin(), core.end());
        SearchConstraints moved;
        moved.required_core = core;
        const auto w2 = searcher.find(moved);
        const bool held = w2.has_value() && is_valid_witness(f, h, *w2, moved);
        counterexamples += !held;
        out.check(held, "moved core, instance " + str(i));
      }
    }
    out.check(first_premises > 0 && second_premises > 0, "premises never triggered");
    out.detail << "300 instances; premise held " << first_premises << " times (shifted edge) and " << second_premises
               << " times (moved core); " << counterexamples << " counterexamples";
  });

  criterion(10, "H(n,3,K4) is Berge-K4-free; each block meets nu=2 edges", 60, [](Outcome& out) {
    const Graph k4 = make_clique(4);
    for (int n : {12, 20, 40}) {
      const Construction c = build_h_min_deg(n, 3, k4);
      out.check(is_berge_free(c.hypergraph, k4).is_free, "n=" + str(n) + " not free");
      std::size_t blocks = 0;
      for (std::size_t i = 1;; ++i) {
        const VertexSet block = c.labels.block(RoleKind::A, i);
        if (block.empty()) break;
        ++blocks;
        std::size_t meeting = 0;
        for (const auto& e : c.hypergraph.edges())
          meeting += std::any_of(block.begin(), block.end(), [&](Vertex x) { return contains_vertex(e, x); });
        out.check(meeting == 2, "n=" + str(n) + " block " + str(i));
      }
      out.check(blocks == static_cast<std::size_t>(n - 2) / 2, "n=" + str(n) + " block count");
      out.detail << "n=" << n << ": " << c.hypergraph.edge_count() << " edges, " << blocks << " blocks; ";
    }
  });

  criterion(11, "H_3(40,3,C5,S) is Berge-C5-free", 60, [](Outcome& out) {
    const Graph c5 = make_cycle(5);
    const FeedbackSet s = feedback_number(c5);
    const Construction c = build_h_feedback(40, 3, 3, c5, s.vertices);
    out.check(girth(c5).value() > s.size, "hypothesis g > f");
    out.check(is_berge_free(c.hypergraph, c5).is_free, "not free");
    out.detail << c.hypergraph.edge_count() << " edges, S=" << format_vertex_set(s.vertices)
               << ", warning: " << (c.warnings.empty() ? "none" : c.warnings.front());
  });

  criterion(12, "Invariant suite: Gallai, feedback minimality, witnesses, parallel determinism", 120,
            [](Outcome& out) {
              Rng rng(12);
              std::vector<Graph> graphs{make_clique(4), make_cycle(5), make_star(4), make_path(6),
                                        complete_join(make_clique(2), make_empty(3))};
              for (int i = 0; i < 100; ++i) graphs.push_back(bergesat::testing::random_graph(rng, 2 + i % 11, 0.35));
              for (const auto& g : graphs) {
                const std::size_t alpha = independence_number(g);
                out.check(alpha == bergesat::testing::brute_independence(g), "alpha");
                out.check(alpha + vertex_cover_number(g) == g.vertex_count(), "Gallai");
                const FeedbackSet fs = feedback_number(g);
                out.check(bergesat::testing::brute_forest(g.without(fs.vertices)), "feedback set leaves a cycle");
                if (fs.size > 0) {
                  VertexSet smaller(fs.size - 1);
                  for (std::size_t j = 0; j < smaller.size(); ++j) smaller[j] = static_cast<Vertex>(j);
                  do {
                    out.check(!bergesat::testing::brute_forest(g.without(smaller)), "smaller feedback set exists");
                  } while (next_combination(smaller, g.vertex_count()));
                }
              }
              const auto patterns = bergesat::testing::small_patterns();
              int witnesses = 0;
              for (int i = 0; i < 300; ++i) {
                const auto& [name, f] = patterns[i % patterns.size()];
                const Hypergraph h = bergesat::testing::random_hypergraph(rng, 4 + i % 6, 2 + i % 7, 2, 4);
                if (const auto w = find_berge_witness(f, h)) {
                  ++witnesses;
                  out.check(!witness_error(f, h, *w), "invalid witness for " + name);
                }
              }
              const Hypergraph s = build_s(21, 3, 4).hypergraph;
              SaturationOptions one, eight;
              eight.jobs = 8;
              const SaturationReport a = is_saturated(s, make_clique(4), 3, one);
              const SaturationReport b = is_saturated(s, make_clique(4), 3, eight);
              out.check(a.same_result(b), "jobs 1 vs 8 reports differ");
              out.detail << graphs.size() << " graphs, " << witnesses << " witnesses validated, jobs 1 vs 8 identical";
            });

  std::printf("summary: %d criterion line(s) failed\n", failures);
  return failures ? 1 : 0;
}
