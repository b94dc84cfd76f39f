// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion 4   run one

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "vguard/bench.hpp"
#include "vguard/io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace vguard;

namespace {

// Pinned tolerances and sizes.
constexpr int kCoverageInstances = 100;
constexpr std::size_t kMonteCarloSamples = 10'000;
constexpr int kOracleInstances = 50;
constexpr std::size_t kOracleMaxN = 14;
constexpr double kGhoshWithinTwiceShare = 0.90;
constexpr double kWeakVisFactor = 6.0;
constexpr int kTrendInstances = 30;
constexpr int kLargeSpokes = 50;  // 2n + 1 = 101 vertices
constexpr int kHybridInstances = 30;
constexpr int kHybridMaxN = 20;
constexpr double kHybridRatio = 2.0;
constexpr double kHybridShare = 0.90;
constexpr int kGeneratorSeeds = 100;
constexpr double kAreaRelTol = 1e-6;
constexpr std::size_t kPartitionSamples = 1000;
constexpr double kDistanceRelTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char b[512];
  std::snprintf(b, sizeof b, f, args...);
  return b;
}

WeakVisInstance weakvis(std::uint64_t seed, int n, std::optional<int> dents = {}) {
  GenConfig c;
  c.seed = seed;
  c.n = n;
  c.dents = dents;
  return gen_weakvis(c);
}

Polygon simple(std::uint64_t seed, int n, int r) {
  GenConfig c;
  c.seed = seed;
  c.n = n;
  c.r_target = r;
  return gen_simple(c);
}

// Weak visibility polygon with at most kOracleMaxN vertices for index i.
WeakVisInstance small_weakvis(std::uint64_t seed, int i) {
  const int spokes = 2 + i % 5;              // 2..6
  const int dents = (i / 5) % spokes;        // 0..spokes-1
  return weakvis(seed, spokes, dents);       // spokes + dents + 2 <= 13
}

// ---------------------------------------------------------------------------

Outcome coverage_soundness() {
  VerifyOptions vo;
  vo.mc_samples = kMonteCarloSamples;
  std::size_t checked = 0, failed = 0;
  std::map<std::string, std::size_t> by_algo;
  std::string first;
  for (Suite suite : {Suite::SmallLowR, Suite::BalancedR}) {
    SuiteOptions so;
    so.suite = suite;
    so.instances = kCoverageInstances;
    so.base_seed = 1000;
    for (int i = 0; i < kCoverageInstances; ++i) {
      const BenchInstance b = make_suite_instance(so, i);
      GhoshOptions go;
      go.arrangement = auto_arrangement(b.polygon.size());
      HybridOptions ho;
      ho.ghosh = go;
      const std::vector<std::pair<GuardSolution, Coverage>> sols{
          {solve_ghosh(b.polygon, go), Coverage::Components},
          {solve_weakvis6(*b.weakvis), Coverage::Vertices},
          {solve_hybrid(b.polygon, ho), Coverage::Components}};
      for (const auto& [sol, mode] : sols) {
        vo.seed = mix_seed(b.seed, static_cast<std::uint64_t>(sol.algorithm));
        const CoverageReport rep = verify_coverage(b.polygon, sol, mode, vo);
        ++checked;
        by_algo[to_string(sol.algorithm)] += !rep.pass;
        if (!rep.pass) {
          if (failed++ == 0) first = b.id + " " + to_string(sol.algorithm) + ": " + rep.reason;
        }
      }
    }
  }
  std::string split;
  for (const auto& [algo, f] : by_algo) split += fmt(" %s=%zu", algo.c_str(), f);
  return {failed == 0, fmt("%zu solutions verified, %zu failures (by solver:%s)%s%s", checked, failed, split.c_str(),
                           first.empty() ? "" : "; first: ", first.c_str())};
}

Outcome ghosh_oracle_ratio() {
  int within_bound = 0, within_twice = 0, total = 0;
  double worst = 0.0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const std::uint64_t seed = 2000 + static_cast<std::uint64_t>(i);
    // Alternate weak visibility and general simple polygons.
    const Polygon p = i % 2 == 0 ? small_weakvis(seed, i / 2).polygon : simple(seed, 6 + i % 5, 1 + (i / 2) % 4);
    if (p.size() > kOracleMaxN) throw std::logic_error("oracle instance too large");
    const ConvexDecomposition d = decompose(p);
    const std::size_t g = solve_ghosh(p).size();
    const std::size_t opt = solve_optimal(p, Coverage::Components).size();
    const double bound = (1.0 + std::log(static_cast<double>(d.m()))) * static_cast<double>(opt);
    ++total;
    within_bound += static_cast<double>(g) <= bound;
    within_twice += g <= 2 * opt;
    worst = std::max(worst, static_cast<double>(g) / static_cast<double>(opt));
  }
  const double share = static_cast<double>(within_twice) / total;
  return {within_bound == total && share >= kGhoshWithinTwiceShare,
          fmt("%d/%d within (1+ln m)*OPT, %d/%d (%.0f%%) within 2*OPT (need %.0f%%), worst ratio %.3g", within_bound,
              total, within_twice, total, 100 * share, 100 * kGhoshWithinTwiceShare, worst)};
}

Outcome weakvis_oracle_ratio() {
  int ok = 0;
  double worst = 0.0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const WeakVisInstance w = small_weakvis(3000 + static_cast<std::uint64_t>(i), i);
    if (w.size() > kOracleMaxN) throw std::logic_error("oracle instance too large");
    const std::size_t g = solve_weakvis6(w).size();
    const std::size_t opt = solve_optimal(w.polygon, Coverage::Vertices).size();
    ok += static_cast<double>(g) <= kWeakVisFactor * static_cast<double>(opt);
    worst = std::max(worst, static_cast<double>(g) / static_cast<double>(opt));
  }
  return {ok == kOracleInstances, fmt("%d/%d within 6*OPT, worst ratio %.3g", ok, kOracleInstances, worst)};
}

struct TrendRegime {
  double ghosh_mean = 0.0, w6_mean = 0.0;
  double ghosh_median_s = 0.0, w6_median_s = 0.0;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

TrendRegime trend_regime(Suite suite) {
  SuiteOptions so;
  so.suite = suite;
  so.instances = kTrendInstances;
  so.base_seed = 4000;
  if (suite == Suite::Large) so.n_min = so.n_max = 2 * kLargeSpokes + 1;
  so.oracle_max_n = 0;
  const auto rows = run_suite(so);
  std::vector<double> gs, ws, gt, wt;
  for (const auto& r : rows) {
    if (!r.guards) throw std::runtime_error(r.instance + " " + r.algo + " failed: " + r.error);
    const bool ghosh = r.algo.rfind("ghosh", 0) == 0;
    (ghosh ? gs : ws).push_back(static_cast<double>(*r.guards));
    (ghosh ? gt : wt).push_back(r.seconds);
  }
  TrendRegime t;
  for (double x : gs) t.ghosh_mean += x / static_cast<double>(gs.size());
  for (double x : ws) t.w6_mean += x / static_cast<double>(ws.size());
  t.ghosh_median_s = median(gt);
  t.w6_median_s = median(wt);
  return t;
}

TrendRegime& large_regime() {
  static TrendRegime t = trend_regime(Suite::Large);
  return t;
}

Outcome guard_count_trend() {
  const TrendRegime small = trend_regime(Suite::BalancedR);
  const TrendRegime& large = large_regime();
  return {small.ghosh_mean <= small.w6_mean && large.ghosh_mean <= large.w6_mean,
          fmt("n in [11,31]: mean ghosh %.2f vs weakvis6 %.2f; n=101: mean ghosh %.2f vs weakvis6 %.2f "
              "(%d instances each)",
              small.ghosh_mean, small.w6_mean, large.ghosh_mean, large.w6_mean, kTrendInstances)};
}

Outcome runtime_crossover() {
  const TrendRegime& large = large_regime();
  return {large.w6_median_s < large.ghosh_median_s,
          fmt("n=101: median weakvis6 %.4gs vs ghosh %.4gs", large.w6_median_s, large.ghosh_median_s)};
}

Outcome hybrid_bound() {
  SuiteOptions so;
  so.suite = Suite::Hybrid;
  so.instances = kHybridInstances;
  so.base_seed = 5000;
  so.n_min = 12;
  so.n_max = kHybridMaxN;
  int within = 0, reflex_branch = 0, ghosh_branch = 0;
  double worst = 0.0;
  for (int i = 0; i < kHybridInstances; ++i) {
    const BenchInstance b = make_suite_instance(so, i);
    const GuardSolution s = solve_hybrid(b.polygon);
    const std::string& branch = s.meta.at("branch");
    reflex_branch += branch != "ghosh";
    ghosh_branch += branch == "ghosh";
    const double ratio = static_cast<double>(s.size()) /
                         static_cast<double>(solve_optimal(b.polygon, Coverage::Components).size());
    within += ratio <= kHybridRatio;
    worst = std::max(worst, ratio);
  }
  const double share = static_cast<double>(within) / kHybridInstances;
  return {share >= kHybridShare && reflex_branch > 0 && ghosh_branch > 0,
          fmt("%d/%d (%.0f%%) with ratio <= 2 (need %.0f%%), worst %.3g; branches reflex=%d ghosh=%d", within,
              kHybridInstances, 100 * share, 100 * kHybridShare, worst, reflex_branch, ghosh_branch)};
}

Outcome generator_validity() {
  int weak_ok = 0, simple_ok = 0;
  std::string first;
  for (int s = 1; s <= kGeneratorSeeds; ++s) {
    const int n = 2 + s % 12;
    try {
      const WeakVisInstance w = weakvis(static_cast<std::uint64_t>(s), n);
      WeakVisCheckOptions o;
      o.seed = static_cast<std::uint64_t>(s);
      const bool ok = is_simple(w.polygon) && w.size() == static_cast<std::size_t>(2 * n + 1) &&
                      validate_weakvis(w, o).pass;
      weak_ok += ok;
      if (!ok && first.empty()) first = fmt("weakvis seed %d", s);
    } catch (const std::exception& e) {
      if (first.empty()) first = fmt("weakvis seed %d: %s", s, e.what());
    }
    const int convex = 6 + s % 20, r = s % 8;
    try {
      const Polygon p = simple(static_cast<std::uint64_t>(s), convex, r);
      const bool ok = is_simple(p) && reflex_vertices(p).size() == static_cast<std::size_t>(r) &&
                      p.size() == static_cast<std::size_t>(convex + r);
      simple_ok += ok;
      if (!ok && first.empty()) first = fmt("simple seed %d", s);
    } catch (const std::exception& e) {
      if (first.empty()) first = fmt("simple seed %d: %s", s, e.what());
    }
  }
  return {weak_ok == kGeneratorSeeds && simple_ok == kGeneratorSeeds,
          fmt("weakvis %d/%d, simple %d/%d%s%s", weak_ok, kGeneratorSeeds, simple_ok, kGeneratorSeeds,
              first.empty() ? "" : "; first failure ", first.c_str())};
}

Outcome structural_suites() {
  std::vector<Polygon> polys = fixtures::all();
  for (std::uint64_t s = 1; s <= 3; ++s) {
    polys.push_back(weakvis(s, 5).polygon);
    polys.push_back(simple(s, 8, 3));
  }
  int area = 0, partition = 0, spt = 0, sym = 0, det = 0, trip = 0;
  const int total = static_cast<int>(polys.size());
  for (const Polygon& p : polys) {
    DecomposeOptions unchecked;
    unchecked.check = false;
    const ConvexDecomposition d = decompose(p, unchecked);
    double sum = 0.0;
    for (const auto& c : d.components) sum += std::abs(signed_area(c.boundary.vertices()));
    area += std::abs(sum - polygon_area(p)) <= kAreaRelTol * polygon_area(p);

    bool part = true;
    for (const Point& q : sample_interior(p, kPartitionSamples, 77)) {
      const auto id = locate(d, q);
      if (!id) {
        part = false;
        break;
      }
    }
    partition += part;

    const VisibilityMap vis = vertex_visibility_matrix(p);
    bool symmetric = true;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) symmetric &= vis(i, j) == vis(j, i);
    sym += symmetric;

    bool spt_ok = true;
    for (int root = 0; root < static_cast<int>(p.size()); ++root) {
      const ShortestPathTree t = shortest_path_tree(p, root, vis);
      const auto ref = oracle::dijkstra(p, root, [&](int a, int b) { return oracle::segment_sees(p, p[a], p[b]); });
      for (std::size_t z = 0; z < p.size(); ++z)
        spt_ok &= std::abs(t.distance[z] - ref[z]) <= kDistanceRelTol * (1.0 + ref[z]);
    }
    spt += spt_ok;

    det += solve_ghosh(p).guards == solve_ghosh(p).guards;

    const PolygonFile f{normalized_ccw(p), std::pair{0, 1}, 5};
    const std::string text = emit_polygon(f);
    const PolygonFile back = parse_polygon(text);
    trip += back.polygon == f.polygon && emit_polygon(back) == text;
  }
  const bool pass = area == total && partition == total && spt == total && sym == total && det == total && trip == total;
  return {pass, fmt("%d polygons: area %d, partition %d, spt %d, symmetry %d, determinism %d, round-trip %d", total, area,
                    partition, spt, sym, det, trip)};
}

Outcome known_instances() {
  std::vector<std::string> bad;
  std::ostringstream info;
  for (int k : {2, 3, 4}) {
    const Polygon c = fixtures::comb(k);
    const std::size_t opt = solve_optimal(c, Coverage::Components).size();
    const std::size_t g = solve_ghosh(c).size();
    info << "comb" << k << " opt=" << opt << " ghosh=" << g << "; ";
    if (opt != static_cast<std::size_t>(k) || g != static_cast<std::size_t>(k)) bad.push_back(fmt("comb %d", k));
  }
  for (int n : {3, 4, 6, 9}) {
    const Polygon p = fixtures::regular(n);
    const std::size_t g = solve_ghosh(p).size(), h = solve_hybrid(p).size();
    const std::size_t o = solve_optimal(p, Coverage::Components).size();
    const std::size_t w = solve_weakvis6(make_instance(p, 0, 1)).size();
    info << "convex" << n << " ghosh=" << g << " weakvis6=" << w << " hybrid=" << h << " opt=" << o << "; ";
    if (g != 1 || h != 1 || o != 1) bad.push_back(fmt("convex %d", n));
    if (w != 1) bad.push_back(fmt("convex %d weakvis6=%zu", n, w));
  }
  const Polygon l = fixtures::l_shape();
  const std::size_t lo = solve_optimal(l, Coverage::Components).size(), lg = solve_ghosh(l).size();
  info << "L opt=" << lo << " ghosh=" << lg;
  if (lo != 1 || lg != 1) bad.push_back("L-shape");
  std::string d = info.str();
  if (!bad.empty()) {
    d += "; mismatches:";
    for (const auto& b : bad) d += " [" + b + "]";
  }
  return {bad.empty(), d};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "criterion numbers to run (default all)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "coverage soundness", coverage_soundness},
      {2, "ghosh oracle ratio", ghosh_oracle_ratio},
      {3, "weakvis6 oracle ratio", weakvis_oracle_ratio},
      {4, "guard count trend", guard_count_trend},
      {5, "runtime crossover", runtime_crossover},
      {6, "hybrid bound", hybrid_bound},
      {7, "generator validity", generator_validity},
      {8, "structural suites", structural_suites},
      {9, "known instances", known_instances},
  };
  int failures = 0;
  for (const Criterion& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s C%d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
