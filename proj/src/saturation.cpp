#include "bergesat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "bergesat/combinations.hpp"
#include "bergesat/invariants.hpp"

namespace bergesat {
namespace {

constexpr std::uint64_t kChunk = 1 << 14;

struct ChunkResult {
  std::uint64_t checked = 0;
  std::vector<VertexSet> failures;
};

// Runs work(i) for i in [0, count) on `jobs` threads; chunk i always writes
// results[i], so the merged order is fixed.
template <typename Work>
std::vector<ChunkResult> run_chunks(std::uint64_t count, unsigned jobs, Work work) {
  std::vector<ChunkResult> results(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) results[i] = work(i);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> threads;
  for (unsigned t = 0; t < std::min<std::uint64_t>(jobs, count); ++t) threads.emplace_back(worker);
  threads.clear();  // joins
  return results;
}

void merge(SaturationReport& report, std::vector<ChunkResult>& chunks) {
  for (auto& chunk : chunks) {
    report.checked_missing += chunk.checked;
    for (auto& e : chunk.failures) report.violations_sat.push_back(std::move(e));
  }
}

std::vector<ChunkResult> probe_list(const BergeSearcher& searcher, const std::vector<VertexSet>& edges, unsigned jobs) {
  const std::uint64_t chunks = (edges.size() + kChunk - 1) / kChunk;
  return run_chunks(chunks, jobs, [&](std::uint64_t c) {
    ChunkResult out;
    const std::size_t end = std::min<std::size_t>(edges.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      ++out.checked;
      if (!searcher.creates_new(edges[i])) out.failures.push_back(edges[i]);
    }
    return out;
  });
}

// Uniform draw in [0, bound) independent of the standard library's
// distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

void enumerate_orbits(const std::vector<VertexSet>& classes, std::size_t k, std::size_t index, VertexSet& current,
                      std::vector<VertexSet>& out) {
  if (current.size() == k) {
    VertexSet rep = current;
    std::sort(rep.begin(), rep.end());
    out.push_back(std::move(rep));
    return;
  }
  if (index == classes.size()) return;
  const std::size_t room = k - current.size();
  const VertexSet& cls = classes[index];
  for (std::size_t take = std::min(room, cls.size()) + 1; take-- > 0;) {
    for (std::size_t i = 0; i < take; ++i) current.push_back(cls[i]);
    enumerate_orbits(classes, k, index + 1, current, out);
    current.resize(current.size() - take);
  }
}

}  // namespace

std::string SaturationMode::to_string() const {
  switch (kind) {
    case Kind::full: return "full";
    case Kind::sampled: return "sampled(" + std::to_string(sample_count) + "," + std::to_string(seed) + ")";
    case Kind::orbits: return "orbits";
  }
  return "?";
}

bool SaturationReport::same_result(const SaturationReport& other) const {
  return is_free == other.is_free && violations_free == other.violations_free &&
         checked_missing == other.checked_missing && violations_sat == other.violations_sat &&
         missing_total == other.missing_total && vertex_classes == other.vertex_classes &&
         orbit_count == other.orbit_count && mode == other.mode;
}

FreenessResult is_berge_free(const Hypergraph& h, const Graph& f) {
  FreenessResult result;
  result.witness = find_berge_witness(f, h);
  result.is_free = !result.witness.has_value();
  return result;
}

std::vector<VertexSet> twin_classes(const Hypergraph& h) {
  std::map<std::vector<std::size_t>, std::size_t> class_of;
  std::vector<VertexSet> classes;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    auto [it, inserted] = class_of.emplace(h.incident_edges(v), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

SaturationReport is_saturated(const Hypergraph& h, const Graph& f, std::size_t k, const SaturationOptions& options) {
  if (!is_k_uniform(h, k)) throw std::invalid_argument("saturation check needs a k-uniform hypergraph");
  const auto start = std::chrono::steady_clock::now();
  SaturationReport report;
  report.mode = options.mode;

  const BergeSearcher searcher(h, f);
  if (auto w = searcher.find()) {
    report.is_free = false;
    report.violations_free.push_back(std::move(*w));
  } else {
    report.is_free = true;
  }

  const std::size_t n = h.vertex_count();
  report.missing_total = missing_edges(h, k).size();
  const std::uint64_t total = k <= n ? binomial(n, k) : 0;

  switch (options.mode.kind) {
    case SaturationMode::Kind::full: {
      std::vector<std::uint64_t> present;
      for (const auto& e : h.edges()) present.push_back(rank_combination(e, n));
      std::sort(present.begin(), present.end());
      const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
      auto results = run_chunks(chunks, options.jobs, [&](std::uint64_t c) {
        ChunkResult out;
        const std::uint64_t first = c * kChunk;
        const std::uint64_t last = std::min(total, first + kChunk);
        auto skip = std::lower_bound(present.begin(), present.end(), first);
        VertexSet e = unrank_combination(first, n, k);
        for (std::uint64_t r = first; r < last; ++r) {
          if (skip != present.end() && *skip == r) {
            ++skip;
          } else {
            ++out.checked;
            if (!searcher.creates_new(e)) out.failures.push_back(e);
          }
          next_combination(e, n);
        }
        return out;
      });
      merge(report, results);
      break;
    }
    case SaturationMode::Kind::sampled: {
      std::vector<VertexSet> sample;
      if (options.mode.sample_count >= report.missing_total) {
        for (const auto& e : missing_edges(h, k)) sample.push_back(e);
      } else {
        std::mt19937_64 rng(options.mode.seed);
        std::unordered_set<std::uint64_t> taken;
        while (sample.size() < options.mode.sample_count) {
          const std::uint64_t r = draw_below(rng, total);
          VertexSet e = unrank_combination(r, n, k);
          if (h.contains_edge(e) || !taken.insert(r).second) continue;
          sample.push_back(std::move(e));
        }
        std::sort(sample.begin(), sample.end());
      }
      auto results = probe_list(searcher, sample, options.jobs);
      merge(report, results);
      break;
    }
    case SaturationMode::Kind::orbits: {
      const auto classes = twin_classes(h);
      report.vertex_classes = classes.size();
      std::vector<VertexSet> reps;
      VertexSet current;
      enumerate_orbits(classes, k, 0, current, reps);
      std::erase_if(reps, [&h](const VertexSet& e) { return h.contains_edge(e); });
      std::sort(reps.begin(), reps.end());
      report.orbit_count = reps.size();
      auto results = probe_list(searcher, reps, options.jobs);
      merge(report, results);
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

PairReport all_pairs_good(const Hypergraph& h, std::size_t ell) {
  PairReport report;
  const Graph clique = make_clique(ell);
  const BergeSearcher searcher(h, clique);
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < h.vertex_count(); ++v) {
      const VertexSet pair{u, v};
      if (h.contains_edge(pair)) continue;
      ++report.checked;
      if (!searcher.creates_new(pair)) report.failures.emplace_back(u, v);
    }
  }
  return report;
}

CoreReport all_cores_present(const Hypergraph& h, std::size_t ell) {
  if (ell < 3) throw std::invalid_argument("all_cores_present needs ell >= 3");
  return all_subsets_are_cores(h, ell - 1);
}

}  // namespace bergesat
