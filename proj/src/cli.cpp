#include "bergesat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergesat/berge.hpp"
#include "bergesat/constructions.hpp"
#include "bergesat/invariants.hpp"
#include "bergesat/io.hpp"
#include "bergesat/oracle.hpp"
#include "bergesat/saturation.hpp"
#include "bergesat/witness.hpp"

namespace bergesat::cli {
namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad flag combinations or values caught after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Pattern {
  Graph graph;
  std::vector<Vertex> labels;  // labels[x] = id of x in the input file
  std::string name;
};

Pattern load_pattern(const std::string& graph_path, int clique) {
  if (graph_path.empty() == (clique == 0)) throw UsageError("exactly one of --graph and --clique is required");
  Pattern p;
  if (clique != 0) {
    if (clique < 2) throw UsageError("--clique must be at least 2");
    p.graph = make_clique(static_cast<std::size_t>(clique));
    for (Vertex v = 0; v < p.graph.vertex_count(); ++v) p.labels.push_back(v);
    p.name = "K" + std::to_string(clique);
  } else {
    p.graph = read_graph_file(graph_path, &p.labels);
    p.name = graph_path;
  }
  return p;
}

std::vector<Vertex> relabel(const VertexSet& s, const std::vector<Vertex>& labels) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(labels[v]);
  return out;
}

// Core map keyed by the pattern's file ids; edge map as
// [[a, b], [hyperedge]] pairs in pattern-edge order.
void add_witness(Json& j, const Pattern& p, const Hypergraph& h, const BergeWitness& w) {
  Json core = Json::array();
  for (Vertex x = 0; x < w.core_map.size(); ++x) core.push_back({p.labels[x], w.core_map[x]});
  Json edges = Json::array();
  for (std::size_t i = 0; i < w.edge_map.size(); ++i) {
    const auto [a, b] = p.graph.edge(i);
    edges.push_back({Json{p.labels[a], p.labels[b]}, h.edge(w.edge_map[i])});
  }
  j["witness_core"] = std::move(core);
  j["witness_edges"] = std::move(edges);
  j["witness"] = format_witness(p.graph, h, w, p.labels);
}

Json edge_list(const std::vector<VertexSet>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(e);
  return out;
}

std::size_t checked_size(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  return static_cast<std::size_t>(value);
}

void write_construction(const Construction& c, const std::string& path, const std::string& labels_path, Json& j,
                        std::ostream& err) {
  const std::string labels = labels_path.empty() ? path + ".labels" : labels_path;
  write_text_file(path, serialize_hypergraph(c.hypergraph));
  write_text_file(labels, c.labels.serialize());
  j["path"] = path;
  j["labels"] = labels;
  j["vertices"] = c.hypergraph.vertex_count();
  j["edges"] = c.hypergraph.edge_count();
  j["warnings"] = c.warnings;
  for (const auto& w : c.warnings) err << "warning: " << w << "\n";
  err << "wrote " << c.hypergraph.edge_count() << " edges on " << c.hypergraph.vertex_count() << " vertices to "
      << path << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berge hypergraph saturation toolkit", "bergesat"};
  app.require_subcommand(1);

  struct {
    int n = 0, k = 0, ell = 0, a = 0, clique = 0, jobs = 1, max_m = 0;
    std::string output, labels, graph, hgraph, feedback_set, require_core, require_edge;
    std::optional<std::uint64_t> sample, seed;
    bool orbits = false, isomorph_reject = false;
  } o;

  auto* gen = app.add_subcommand("gen", "Generate a construction")->require_subcommand(1);
  auto* gen_c = gen->add_subcommand("c", "C(k,ell)");
  gen_c->add_option("--k", o.k)->required();
  gen_c->add_option("--ell", o.ell)->required();
  auto* gen_s = gen->add_subcommand("s", "S(n,k,ell)");
  gen_s->add_option("--n", o.n)->required();
  gen_s->add_option("--k", o.k)->required();
  gen_s->add_option("--ell", o.ell)->required();
  auto* gen_mindeg = gen->add_subcommand("mindeg", "H(n,k,F)");
  gen_mindeg->add_option("--n", o.n)->required();
  gen_mindeg->add_option("--k", o.k)->required();
  gen_mindeg->add_option("--graph", o.graph)->required();
  auto* gen_feedback = gen->add_subcommand("feedback", "H_k(n,a,G,S)");
  gen_feedback->add_option("--n", o.n)->required();
  gen_feedback->add_option("--k", o.k)->required();
  gen_feedback->add_option("--a", o.a)->required();
  gen_feedback->add_option("--graph", o.graph)->required();
  gen_feedback->add_option("--feedback-set", o.feedback_set);
  for (auto* sub : {gen_c, gen_s, gen_mindeg, gen_feedback}) {
    sub->add_option("-o", o.output)->required();
    sub->add_option("--labels", o.labels);
  }

  auto* check = app.add_subcommand("check", "Check a hypergraph property")->require_subcommand(1);
  auto* check_contains = check->add_subcommand("contains", "Berge-F containment");
  check_contains->add_option("--graph", o.graph)->required();
  check_contains->add_option("--hgraph", o.hgraph)->required();
  check_contains->add_option("--require-core", o.require_core);
  check_contains->add_option("--require-edge", o.require_edge);
  auto* check_free = check->add_subcommand("free", "Berge-F-freeness");
  check_free->add_option("--graph", o.graph)->required();
  check_free->add_option("--hgraph", o.hgraph)->required();
  auto* check_sat = check->add_subcommand("saturated", "Berge-F-saturation");
  check_sat->add_option("--hgraph", o.hgraph)->required();
  auto* sat_graph = check_sat->add_option("--graph", o.graph);
  auto* sat_clique = check_sat->add_option("--clique", o.clique);
  sat_graph->excludes(sat_clique);
  check_sat->add_option("--k", o.k)->required();
  check_sat->add_option("--jobs", o.jobs)->check(CLI::Range(1, 1024));
  auto* sample = check_sat->add_option("--sample", o.sample);
  auto* seed = check_sat->add_option("--seed", o.seed);
  auto* orbits = check_sat->add_flag("--orbits", o.orbits);
  sample->needs(seed);
  seed->needs(sample);
  orbits->excludes(sample);

  auto* lemma = app.add_subcommand("verify-lemma", "Check pair and core conditions")->require_subcommand(1);
  auto* lemma_pairs = lemma->add_subcommand("pairs-good", "Every pair is ell-good");
  auto* lemma_cores = lemma->add_subcommand("cores", "Every (ell-1)-set is a Berge-K_{ell-1} core");
  for (auto* sub : {lemma_pairs, lemma_cores}) {
    sub->add_option("--hgraph", o.hgraph)->required();
    sub->add_option("--ell", o.ell)->required();
  }

  auto* invariants = app.add_subcommand("invariants", "Graph invariants");
  invariants->add_option("--graph", o.graph)->required();

  auto* search = app.add_subcommand("search", "Search tools")->require_subcommand(1);
  auto* search_minsat = search->add_subcommand("minsat", "Exact minimum saturated edge count");
  search_minsat->add_option("--n", o.n)->required();
  search_minsat->add_option("--k", o.k)->required();
  auto* ms_graph = search_minsat->add_option("--graph", o.graph);
  auto* ms_clique = search_minsat->add_option("--clique", o.clique);
  ms_graph->excludes(ms_clique);
  search_minsat->add_option("--max-m", o.max_m)->required();
  search_minsat->add_flag("--isomorph-reject", o.isomorph_reject);
  auto* search_greedy = search->add_subcommand("greedy", "Greedy saturation completion");
  search_greedy->add_option("--hgraph", o.hgraph)->required();
  search_greedy->add_option("--graph", o.graph)->required();
  search_greedy->add_option("--k", o.k)->required();
  search_greedy->add_option("-o", o.output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  Json j;
  int code = kHolds;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (gen_c->parsed()) {
      j["command"] = "gen c";
      const Construction c = build_c(o.k, o.ell);
      write_construction(c, o.output, o.labels, j, err);
    } else if (gen_s->parsed()) {
      j["command"] = "gen s";
      const SConstruction s = build_s(o.n, o.k, o.ell);
      j["a"] = s.params.a;
      j["b"] = s.params.b;
      write_construction(s, o.output, o.labels, j, err);
    } else if (gen_mindeg->parsed()) {
      j["command"] = "gen mindeg";
      const Graph f = read_graph_file(o.graph);
      write_construction(build_h_min_deg(o.n, o.k, f), o.output, o.labels, j, err);
    } else if (gen_feedback->parsed()) {
      j["command"] = "gen feedback";
      std::vector<Vertex> ids;
      const Graph g = read_graph_file(o.graph, &ids);
      std::optional<VertexSet> s;
      if (!o.feedback_set.empty()) {
        VertexSet raw = parse_csv_vertices(o.feedback_set);
        s.emplace();
        for (Vertex v : raw) {
          const auto it = std::find(ids.begin(), ids.end(), v);
          if (it == ids.end()) throw std::invalid_argument("feedback vertex " + std::to_string(v) + " is not in G");
          s->push_back(static_cast<Vertex>(it - ids.begin()));
        }
        std::sort(s->begin(), s->end());
      }
      write_construction(build_h_feedback(o.n, o.k, o.a, g, s), o.output, o.labels, j, err);
    } else if (check_contains->parsed()) {
      j["command"] = "check contains";
      const Pattern p = load_pattern(o.graph, 0);
      const Hypergraph h = read_hypergraph_file(o.hgraph);
      SearchConstraints c;
      if (!o.require_core.empty()) c.required_core = parse_csv_vertices(o.require_core);
      for (Vertex v : c.required_core) {
        if (v >= h.vertex_count()) throw std::invalid_argument("--require-core vertex out of range");
      }
      const BergeSearcher searcher(h, p.graph);
      std::optional<BergeWitness> w;
      std::optional<Hypergraph> extended;
      if (!o.require_edge.empty()) {
        VertexSet e = parse_csv_vertices(o.require_edge);
        for (Vertex v : e) {
          if (v >= h.vertex_count()) throw std::invalid_argument("--require-edge vertex out of range");
        }
        j["require_edge_present"] = h.contains_edge(e);
        if (h.contains_edge(e)) {
          c.required_edge = e;
          w = searcher.find(c);
        } else {
          // Absent edge: search H + e for a Berge-F through e.
          w = searcher.find_new(e, c);
          extended = add_edge(h, e);
        }
      } else {
        w = searcher.find(c);
      }
      j["contains"] = w.has_value();
      if (w) add_witness(j, p, extended ? *extended : h, *w);
      err << (w ? "contains" : "does not contain") << " a Berge-" << p.name << "\n";
      code = w ? kHolds : kFails;
    } else if (check_free->parsed()) {
      j["command"] = "check free";
      const Pattern p = load_pattern(o.graph, 0);
      const Hypergraph h = read_hypergraph_file(o.hgraph);
      const FreenessResult r = is_berge_free(h, p.graph);
      j["is_free"] = r.is_free;
      if (r.witness) add_witness(j, p, h, *r.witness);
      err << (r.is_free ? "Berge-" : "not Berge-") << p.name << "-free\n";
      code = r.is_free ? kHolds : kFails;
    } else if (check_sat->parsed()) {
      j["command"] = "check saturated";
      const Pattern p = load_pattern(o.graph, o.clique);
      const Hypergraph h = read_hypergraph_file(o.hgraph);
      SaturationOptions options;
      options.jobs = static_cast<unsigned>(o.jobs);
      if (o.sample) options.mode = SaturationMode::sampled(*o.sample, *o.seed);
      if (o.orbits) options.mode = SaturationMode::orbits();
      const SaturationReport r = is_saturated(h, p.graph, checked_size(o.k, "--k"), options);
      j["mode"] = r.mode.to_string();
      j["is_free"] = r.is_free;
      j["saturated"] = r.saturated();
      j["checked_missing"] = r.checked_missing;
      j["missing_total"] = r.missing_total;
      j["violations_sat"] = edge_list(r.violations_sat);
      if (!r.violations_free.empty()) add_witness(j, p, h, r.violations_free.front());
      if (r.mode.kind == SaturationMode::Kind::orbits) {
        j["vertex_classes"] = r.vertex_classes;
        j["orbit_count"] = r.orbit_count;
      }
      err << "mode " << r.mode.to_string() << ": " << (r.is_free ? "free" : "NOT free") << ", "
          << r.violations_sat.size() << " of " << r.checked_missing << " probed missing edges fail to create a new Berge-"
          << p.name << " (" << r.missing_total << " missing in total)\n";
      if (r.mode.kind == SaturationMode::Kind::orbits && r.orbit_count > 0) {
        err << "orbit reduction factor " << static_cast<double>(r.missing_total) / static_cast<double>(r.orbit_count)
            << "\n";
      }
      code = r.no_violation_found() ? kHolds : kFails;
    } else if (lemma_pairs->parsed()) {
      j["command"] = "verify-lemma pairs-good";
      const Hypergraph h = read_hypergraph_file(o.hgraph);
      if (o.ell < 3) throw std::invalid_argument("--ell must be at least 3");
      const PairReport r = all_pairs_good(h, static_cast<std::size_t>(o.ell));
      j["checked"] = r.checked;
      j["good"] = r.checked - r.failures.size();
      Json failures = Json::array();
      for (const auto& [u, v] : r.failures) failures.push_back({u, v});
      j["failures"] = std::move(failures);
      err << (r.checked - r.failures.size()) << "/" << r.checked << " pairs are " << o.ell << "-good\n";
      code = r.ok() ? kHolds : kFails;
    } else if (lemma_cores->parsed()) {
      j["command"] = "verify-lemma cores";
      const Hypergraph h = read_hypergraph_file(o.hgraph);
      if (o.ell < 3) throw std::invalid_argument("--ell must be at least 3");
      const CoreReport r = all_cores_present(h, static_cast<std::size_t>(o.ell));
      j["checked"] = r.checked;
      j["present"] = r.checked - r.failures.size();
      j["failures"] = edge_list(r.failures);
      err << (r.checked - r.failures.size()) << "/" << r.checked << " " << (o.ell - 1)
          << "-sets are Berge-K" << (o.ell - 1) << " cores\n";
      code = r.ok() ? kHolds : kFails;
    } else if (invariants->parsed()) {
      j["command"] = "invariants";
      std::vector<Vertex> ids;
      const Graph g = read_graph_file(o.graph, &ids);
      const InvariantReport r = compute_invariants(g);
      j["vertices"] = g.vertex_count();
      j["edges"] = g.edge_count();
      j["alpha"] = r.alpha;
      j["beta"] = r.beta;
      j["delta"] = r.delta;
      j["girth"] = r.girth ? Json(*r.girth) : Json(nullptr);
      j["feedback"] = r.feedback.size;
      j["feedback_set"] = relabel(r.feedback.vertices, ids);
      err << "alpha " << r.alpha << ", beta " << r.beta << ", delta " << r.delta << ", girth "
          << (r.girth ? std::to_string(*r.girth) : "inf") << ", feedback " << r.feedback.size << "\n";
    } else if (search_minsat->parsed()) {
      j["command"] = "search minsat";
      const Pattern p = load_pattern(o.graph, o.clique);
      MinSatOptions options;
      options.isomorph_reject = o.isomorph_reject;
      const auto r = min_saturation_search(checked_size(o.n, "--n"), checked_size(o.k, "--k"), p.graph,
                                           checked_size(o.max_m, "--max-m"), options);
      j["found"] = r.has_value();
      if (r) {
        j["m_star"] = r->m_star;
        j["examined"] = r->examined;
        j["witness"] = serialize_hypergraph(r->witness);
        err << "m* = " << r->m_star << " after " << r->examined << " subsets; witness:\n"
            << serialize_hypergraph(r->witness);
      } else {
        err << "no saturated hypergraph with at most " << o.max_m << " edges\n";
      }
      code = r ? kHolds : kFails;
    } else if (search_greedy->parsed()) {
      j["command"] = "search greedy";
      const Pattern p = load_pattern(o.graph, 0);
      const Hypergraph h = read_hypergraph_file(o.hgraph);
      const Hypergraph out_h = greedy_saturate(h, p.graph, checked_size(o.k, "--k"));
      write_text_file(o.output, serialize_hypergraph(out_h));
      j["path"] = o.output;
      j["edges_before"] = h.edge_count();
      j["edges_after"] = out_h.edge_count();
      err << "added " << (out_h.edge_count() - h.edge_count()) << " edges; wrote " << o.output << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "elapsed " << elapsed.count() << " s\n";
  out << j.dump() << "\n";
  return code;
}

}  // namespace bergesat::cli
