#pragma once
// Experiment suites over seeded generated instances.

#include "vguard/io.hpp"
#include "vguard/polygen.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vguard {

enum class Suite { SmallLowR, BalancedR, Large, Hybrid };

inline std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "small-low-r") return Suite::SmallLowR;
  if (s == "balanced-r") return Suite::BalancedR;
  if (s == "large") return Suite::Large;
  if (s == "hybrid") return Suite::Hybrid;
  return std::nullopt;
}

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::SmallLowR: return "small-low-r";
    case Suite::BalancedR: return "balanced-r";
    case Suite::Large: return "large";
    case Suite::Hybrid: return "hybrid";
  }
  return "?";
}

struct SuiteOptions {
  Suite suite = Suite::SmallLowR;
  int instances = 30;
  std::uint64_t base_seed = 1;
  // Vertex-count range; defaults depend on the suite.
  std::optional<int> n_min, n_max;
  double hybrid_c = 1.0;
  std::size_t cell_cap = 2'000'000;
  // Largest vertex count solved with the full vertex-pair arrangement; larger
  // instances use the window arrangement.
  std::size_t lines_max_n = 41;
  std::size_t oracle_max_n = 20;
  bool verify = false;
  VerifyOptions verify_options{};
};

/// Default vertex-count range per suite.
inline std::pair<int, int> suite_range(const SuiteOptions& o) {
  std::pair<int, int> d;
  switch (o.suite) {
    case Suite::SmallLowR: d = {10, 15}; break;
    case Suite::BalancedR: d = {11, 31}; break;
    case Suite::Large: d = {101, 101}; break;
    case Suite::Hybrid: d = {50, 300}; break;
  }
  return {o.n_min.value_or(d.first), o.n_max.value_or(std::max(d.second, o.n_min.value_or(d.first)))};
}

inline Arrangement auto_arrangement(std::size_t n, std::size_t lines_max_n = 41) {
  return n <= lines_max_n ? Arrangement::VertexPairLines : Arrangement::Windows;
}

/// One generated instance and how to regenerate it.
struct BenchInstance {
  std::string id;
  std::uint64_t seed = 0;
  std::optional<WeakVisInstance> weakvis;
  Polygon polygon;
};

namespace detail {

inline std::string pad3(int i) {
  char b[16];
  std::snprintf(b, sizeof b, "%03d", i);
  return b;
}

// Weak visibility polygon with 2..3 reflex vertices and a vertex count in
// range: search over (spokes, dents, sub-seed).
inline BenchInstance small_low_r_instance(int i, std::uint64_t seed, int lo, int hi) {
  for (std::uint64_t j = 0; j < 20000; ++j) {
    const std::uint64_t s = j == 0 ? seed : mix_seed(seed, j);
    Rng pick(mix_seed(s, 0x5EED));
    const int total = lo + static_cast<int>(pick.index(static_cast<std::size_t>(hi - lo + 1)));
    const int d = static_cast<int>(pick.index(4));
    const int spokes = total - d - 2;
    if (spokes < 2 || d > spokes - 1) continue;
    GenConfig cfg;
    cfg.seed = s;
    cfg.n = spokes;
    cfg.dents = d;
    cfg.validate = false;
    const std::size_t r0 = reflex_vertices(gen_weakvis(cfg).polygon).size();
    if (r0 < 2 || r0 > 3) continue;
    cfg.validate = true;
    WeakVisInstance inst;
    try {
      inst = gen_weakvis(cfg);
    } catch (const GenerationFailed&) {
      continue;
    }
    const std::size_t r = reflex_vertices(inst.polygon).size();
    if (r < 2 || r > 3) continue;
    BenchInstance b;
    b.id = "small-low-r-" + pad3(i) + "-n" + std::to_string(spokes) + "-d" + std::to_string(d);
    b.seed = s;
    b.polygon = inst.polygon;
    b.weakvis = std::move(inst);
    return b;
  }
  throw GenerationFailed("small-low-r: no instance found for index " + std::to_string(i));
}

}  // namespace detail

/// Instance i of a suite. Weak visibility suites use spokes = (N - 1) / 2;
/// the hybrid suite sweeps r upwards within each block of eight instances.
inline BenchInstance make_suite_instance(const SuiteOptions& o, int i) {
  const auto [lo, hi] = suite_range(o);
  const std::uint64_t seed = o.base_seed + static_cast<std::uint64_t>(i);
  if (o.suite == Suite::SmallLowR) return detail::small_low_r_instance(i, seed, lo, hi);

  BenchInstance b;
  b.seed = seed;
  const int steps = std::max(1, o.instances - 1);
  if (o.suite == Suite::BalancedR || o.suite == Suite::Large) {
    const int span = (hi - lo) / 2 + 1;  // odd vertex counts in range
    const int total = o.suite == Suite::BalancedR ? lo + 2 * (i % span) : lo + 2 * ((i * (span - 1)) / steps);
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = std::max(1, (total - 1) / 2);
    b.weakvis = gen_weakvis(cfg);
    b.polygon = b.weakvis->polygon;
    b.id = std::string(to_string(o.suite)) + "-" + detail::pad3(i) + "-n" + std::to_string(cfg.n);
    return b;
  }
  const int total = lo + ((hi - lo) * i) / steps;
  const int step = std::max(1, total / 20);
  int r = 1 + (i % 8) * step;
  r = std::min(r, std::max(0, total - 4));
  GenConfig cfg;
  cfg.seed = seed;
  cfg.n = total - r;
  cfg.r_target = r;
  b.polygon = gen_simple(cfg);
  b.id = "hybrid-" + detail::pad3(i) + "-n" + std::to_string(cfg.n) + "-r" + std::to_string(r);
  return b;
}

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const DecompositionOverflow*>(&e)) return "DecompositionOverflow";
  if (dynamic_cast<const RobustnessFailure*>(&e)) return "RobustnessFailure";
  if (dynamic_cast<const NonWeakVisible*>(&e)) return "NonWeakVisible";
  if (dynamic_cast<const IterationOverflow*>(&e)) return "IterationOverflow";
  if (dynamic_cast<const TooLarge*>(&e)) return "TooLarge";
  if (dynamic_cast<const GenerationFailed*>(&e)) return "GenerationFailed";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InvalidPolygon*>(&e)) return "InvalidPolygon";
  return "Error";
}

using RowSink = std::function<void(const ExperimentRecord&)>;

/// Runs every instance of the suite; rows are passed to `sink` as they finish.
inline std::vector<ExperimentRecord> run_suite(const SuiteOptions& o, const RowSink& sink = {}) {
  std::vector<ExperimentRecord> rows;
  auto emit = [&](ExperimentRecord rec) {
    if (sink) sink(rec);
    rows.push_back(std::move(rec));
  };
  for (int i = 0; i < o.instances; ++i) {
    BenchInstance inst;
    try {
      inst = make_suite_instance(o, i);
    } catch (const std::exception& e) {
      ExperimentRecord rec;
      rec.instance = std::string(to_string(o.suite)) + "-" + detail::pad3(i);
      rec.algo = "generate";
      rec.error = error_kind(e);
      rec.seed = o.base_seed + static_cast<std::uint64_t>(i);
      emit(rec);
      continue;
    }
    const Polygon& poly = inst.polygon;
    const std::size_t n = poly.size(), r = reflex_vertices(poly).size();
    const bool oracle = n <= o.oracle_max_n;
    std::map<Coverage, std::size_t> opt;
    auto optimum = [&](Coverage c) -> std::optional<std::size_t> {
      if (!oracle) return std::nullopt;
      if (!opt.count(c)) opt[c] = solve_optimal(poly, c).size();
      return opt[c];
    };

    auto run = [&](const std::string& algo, Coverage mode, const std::function<GuardSolution()>& solve) {
      ExperimentRecord rec;
      rec.instance = inst.id;
      rec.n = n;
      rec.r = r;
      rec.algo = algo;
      rec.seed = inst.seed;
      try {
        const GuardSolution sol = solve();
        rec.seconds = sol.elapsed;
        if (o.verify && !verify_coverage(poly, sol, mode, o.verify_options).pass) {
          rec.error = "CoverageFailure";
        } else {
          rec.guards = sol.size();
          rec.opt = optimum(mode);
        }
      } catch (const std::exception& e) {
        rec.error = error_kind(e);
      }
      emit(rec);
    };

    const Arrangement arr = auto_arrangement(n, o.lines_max_n);
    GhoshOptions go;
    go.cell_cap = o.cell_cap;
    go.arrangement = arr;
    if (inst.weakvis) {
      run(arr == Arrangement::Windows ? "ghosh-w" : "ghosh", Coverage::Components,
          [&] { return solve_ghosh(poly, go); });
      run("weakvis6", Coverage::Vertices, [&] { return solve_weakvis6(*inst.weakvis); });
    } else {
      HybridOptions ho;
      ho.c = o.hybrid_c;
      ho.ghosh = go;
      run("hybrid", Coverage::Components, [&] { return solve_hybrid(poly, ho); });
    }
  }
  return rows;
}

struct AlgoSummary {
  std::string algo;
  std::size_t rows = 0;
  std::size_t failures = 0;
  double mean_guards = 0.0;
  std::optional<double> mean_ratio;
  double mean_seconds = 0.0;
  double median_seconds = 0.0;
};

inline std::vector<AlgoSummary> summarize(const std::vector<ExperimentRecord>& rows) {
  std::map<std::string, std::vector<const ExperimentRecord*>> by;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    if (!by.count(r.algo)) order.push_back(r.algo);
    by[r.algo].push_back(&r);
  }
  std::vector<AlgoSummary> out;
  for (const auto& algo : order) {
    AlgoSummary s;
    s.algo = algo;
    std::vector<double> secs;
    double g = 0.0, q = 0.0;
    std::size_t nq = 0;
    for (const auto* r : by[algo]) {
      ++s.rows;
      if (!r->guards) {
        ++s.failures;
        continue;
      }
      g += static_cast<double>(*r->guards);
      secs.push_back(r->seconds);
      if (auto x = r->ratio()) {
        q += *x;
        ++nq;
      }
    }
    const std::size_t ok = s.rows - s.failures;
    if (ok > 0) {
      s.mean_guards = g / static_cast<double>(ok);
      double t = 0.0;
      for (double x : secs) t += x;
      s.mean_seconds = t / static_cast<double>(ok);
      std::sort(secs.begin(), secs.end());
      const std::size_t m = secs.size();
      s.median_seconds = m % 2 ? secs[m / 2] : 0.5 * (secs[m / 2 - 1] + secs[m / 2]);
    }
    if (nq > 0) s.mean_ratio = q / static_cast<double>(nq);
    out.push_back(s);
  }
  return out;
}

}  // namespace vguard
