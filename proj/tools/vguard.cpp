// vguard: generate polygons, place vertex guards, run experiment suites,
// render scenes and re-verify coverage.

#include "vguard/bench.hpp"
#include "vguard/io.hpp"
#include "vguard/polygen.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace vguard;

namespace {

int fail(const std::string& msg, int code = 1) {
  std::cerr << "error: " << msg << '\n';
  return code;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Arrangement> parse_arrangement(const std::string& s, std::size_t n) {
  if (s == "lines") return Arrangement::VertexPairLines;
  if (s == "windows") return Arrangement::Windows;
  if (s == "auto") return auto_arrangement(n);
  return std::nullopt;
}

std::string fmt(double v, int prec = 6) {
  char b[64];
  std::snprintf(b, sizeof b, "%.*g", prec, v);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex guard placement for simple and weak visibility polygons"};
  app.require_subcommand(1);

  // generate -----------------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "Write a random polygon file");
  std::string gen_kind, gen_out;
  int gen_n = 10, gen_reflex = 0;
  std::optional<int> gen_dents;
  std::uint64_t gen_seed = 1;
  double gen_k = 100.0;
  gen->add_option("kind", gen_kind, "weakvis | simple | convex")->required()->check(
      CLI::IsMember({"weakvis", "simple", "convex"}));
  gen->add_option("--n", gen_n, "spokes (weakvis) or convex vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--reflex", gen_reflex, "reflex vertices for simple polygons")->check(CLI::NonNegativeNumber);
  gen->add_option("--dents", gen_dents, "weakvis gaps that receive a dent point (default all)");
  gen->add_option("--k", gen_k, "half-length of the weakvis base segment");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve --------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Place guards on a polygon file");
  std::string solve_algo, solve_in, solve_arr = "auto", solve_cov = "components", solve_out;
  std::vector<int> solve_edge;
  bool solve_json = false, solve_verify = false, solve_vstop = false;
  double solve_c = 1.0;
  std::size_t solve_cap = 2'000'000, solve_samples = 10'000;
  std::uint64_t solve_seed = 12345;
  solve->add_option("algo", solve_algo, "ghosh | weakvis6 | hybrid | optimal")->required()->check(
      CLI::IsMember({"ghosh", "weakvis6", "hybrid", "optimal"}));
  solve->add_option("input", solve_in, "polygon file")->required();
  solve->add_option("--edge", solve_edge, "weak visibility edge u v (overrides the file's EDGE line)")->expected(2);
  solve->add_flag("--json", solve_json, "print the full solution as JSON");
  solve->add_flag("--verify", solve_verify, "re-verify coverage; exit 2 on failure");
  solve->add_option("--hybrid-c", solve_c, "constant c of the hybrid rule r - c <= log2 log2 n");
  solve->add_option("--cell-cap", solve_cap, "decomposition cell cap");
  solve->add_option("--arrangement", solve_arr, "lines | windows | auto")->check(
      CLI::IsMember({"lines", "windows", "auto"}));
  solve->add_option("--coverage", solve_cov, "optimal: components | vertices")->check(
      CLI::IsMember({"components", "vertices"}));
  solve->add_flag("--vertex-stop", solve_vstop, "ghosh: stop once every vertex is seen");
  solve->add_option("--samples", solve_samples, "Monte Carlo points for --verify");
  solve->add_option("--seed", solve_seed, "Monte Carlo seed for --verify");
  solve->add_option("--out", solve_out, "also write the solution JSON here");

  // bench --------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Run an experiment suite and write CSV rows");
  std::string bench_suite, bench_out;
  SuiteOptions bopt;
  int bench_nmin = 0, bench_nmax = 0;
  bench->add_option("suite", bench_suite, "small-low-r | balanced-r | large | hybrid")->required()->check(
      CLI::IsMember({"small-low-r", "balanced-r", "large", "hybrid"}));
  bench->add_option("--seeds", bopt.instances, "number of instances")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bopt.base_seed, "seed of the first instance");
  bench->add_option("--n-min", bench_nmin, "smallest vertex count");
  bench->add_option("--n-max", bench_nmax, "largest vertex count");
  bench->add_option("--hybrid-c", bopt.hybrid_c, "constant c of the hybrid rule");
  bench->add_option("--cell-cap", bopt.cell_cap, "decomposition cell cap");
  bench->add_option("--lines-max-n", bopt.lines_max_n, "largest n solved with the full line arrangement");
  bench->add_option("--oracle-max-n", bopt.oracle_max_n, "largest n given an exact optimum");
  bench->add_flag("--verify", bopt.verify, "re-verify every solution");
  bench->add_option("--out", bench_out, "CSV output (default stdout)");

  // render -------------------------------------------------------------------
  auto* render = app.add_subcommand("render", "Draw a polygon and optional guards as SVG");
  std::string render_in, render_sol, render_out;
  render->add_option("input", render_in, "polygon file")->required();
  render->add_option("--solution", render_sol, "solution JSON from solve --json/--out");
  render->add_option("--out", render_out, "SVG output (default stdout)");

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Re-check that a guard set covers a polygon");
  std::string verify_in, verify_sol, verify_mode = "components", verify_arr = "auto";
  std::vector<int> verify_guards;
  std::size_t verify_samples = 10'000;
  std::uint64_t verify_seed = 12345;
  bool verify_json = false;
  verify->add_option("input", verify_in, "polygon file")->required();
  verify->add_option("--solution", verify_sol, "solution JSON");
  verify->add_option("--guards", verify_guards, "guard vertex indices")->delimiter(',');
  verify->add_option("--mode", verify_mode, "components | vertices")->check(
      CLI::IsMember({"components", "vertices"}));
  verify->add_option("--arrangement", verify_arr, "lines | windows | auto")->check(
      CLI::IsMember({"lines", "windows", "auto"}));
  verify->add_option("--samples", verify_samples, "Monte Carlo interior points");
  verify->add_option("--seed", verify_seed, "Monte Carlo seed");
  verify->add_flag("--json", verify_json, "print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GenConfig cfg;
      cfg.seed = gen_seed;
      cfg.n = gen_n;
      cfg.k = gen_k;
      cfg.r_target = gen_reflex;
      cfg.dents = gen_dents;
      PolygonFile f;
      f.seed = gen_seed;
      if (gen_kind == "weakvis") {
        const WeakVisInstance inst = gen_weakvis(cfg);
        f = polygon_file(inst, gen_seed);
      } else if (gen_kind == "simple") {
        f.polygon = gen_simple(cfg);
      } else {
        if (gen_n < 3) return fail("convex polygons need --n >= 3");
        f.polygon = gen_convex(gen_n, gen_seed, gen_k);
      }
      write_text(gen_out, emit_polygon(f));
      std::ostream& info = gen_out.empty() || gen_out == "-" ? std::cerr : std::cout;
      info << "n=" << f.polygon.size() << " r=" << reflex_vertices(f.polygon).size() << " seed=" << gen_seed << '\n';
      return 0;
    }

    if (*solve) {
      const PolygonFile f = read_polygon_file(solve_in);
      validate(f.polygon);
      const std::size_t n = f.polygon.size();
      const Arrangement arr = *parse_arrangement(solve_arr, n);
      GuardSolution sol;
      Coverage mode = Coverage::Components;
      if (solve_algo == "ghosh") {
        GhoshOptions o;
        o.cell_cap = solve_cap;
        o.arrangement = arr;
        o.stop_when_vertices_covered = solve_vstop;
        sol = solve_ghosh(f.polygon, o);
        if (solve_vstop) mode = Coverage::Vertices;
      } else if (solve_algo == "weakvis6") {
        std::optional<std::pair<int, int>> edge = f.edge;
        if (!solve_edge.empty()) edge = std::pair{solve_edge[0], solve_edge[1]};
        if (!edge) return fail("weakvis6 needs an EDGE line in the file or --edge u v");
        const WeakVisInstance inst = make_instance(f.polygon, edge->first, edge->second);
        sol = solve_weakvis6(inst);
        mode = Coverage::Vertices;
      } else if (solve_algo == "hybrid") {
        HybridOptions o;
        o.c = solve_c;
        o.ghosh.cell_cap = solve_cap;
        o.ghosh.arrangement = arr;
        sol = solve_hybrid(f.polygon, o);
      } else {
        mode = solve_cov == "vertices" ? Coverage::Vertices : Coverage::Components;
        sol = solve_optimal(f.polygon, mode);
      }

      if (!solve_out.empty()) write_text(solve_out, to_json(sol).dump(2) + "\n");
      int code = 0;
      std::optional<CoverageReport> rep;
      if (solve_verify) {
        VerifyOptions vo;
        vo.mc_samples = solve_samples;
        vo.seed = solve_seed;
        vo.cell_cap = solve_cap;
        rep = verify_coverage(f.polygon, sol, mode, vo);
        if (!rep->pass) code = 2;
      }
      if (solve_json) {
        nlohmann::json j = to_json(sol);
        if (rep) {
          j["verify"] = {{"pass", rep->pass}, {"mode", to_string(mode)}, {"reason", rep->reason}};
          if (rep->counterexample) j["verify"]["counterexample"] = {rep->counterexample->x, rep->counterexample->y};
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "algorithm " << to_string(sol.algorithm) << '\n';
        if (sol.meta.count("branch")) std::cout << "branch " << sol.meta["branch"] << '\n';
        std::cout << "count " << sol.size() << '\n';
        std::cout << "guards";
        for (int g : sol.guards) std::cout << ' ' << g;
        std::cout << '\n';
        for (std::size_t i = 0; i < sol.guards.size(); ++i)
          std::cout << "guard " << sol.guards[i] << ' ' << fmt(sol.guard_points[i].x, 17) << ' '
                    << fmt(sol.guard_points[i].y, 17) << '\n';
        std::cout << "elapsed " << fmt(sol.elapsed) << '\n';
        if (rep) {
          std::cout << "verify " << (rep->pass ? "pass" : "FAIL") << ' ' << to_string(mode);
          if (!rep->pass) std::cout << ": " << rep->reason;
          std::cout << '\n';
        }
      }
      return code;
    }

    if (*bench) {
      bopt.suite = *parse_suite(bench_suite);
      if (bench_nmin > 0) bopt.n_min = bench_nmin;
      if (bench_nmax > 0) bopt.n_max = bench_nmax;
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!bench_out.empty() && bench_out != "-") {
        file.open(bench_out);
        if (!file) return fail("cannot write " + bench_out);
        out = &file;
      }
      *out << kCsvHeader << '\n';
      const auto rows = run_suite(bopt, [&](const ExperimentRecord& r) { *out << csv_row(r) << '\n' << std::flush; });
      std::ostream& info = out == &std::cout ? std::cerr : std::cout;
      info << "suite " << bench_suite << ": " << rows.size() << " rows\n";
      for (const auto& s : summarize(rows)) {
        info << "  " << s.algo << ": rows=" << s.rows << " failures=" << s.failures << " mean_guards="
             << fmt(s.mean_guards) << " mean_ratio=" << (s.mean_ratio ? fmt(*s.mean_ratio) : "-")
             << " mean_seconds=" << fmt(s.mean_seconds) << " median_seconds=" << fmt(s.median_seconds) << '\n';
      }
      const bool all_failed =
          std::all_of(rows.begin(), rows.end(), [](const ExperimentRecord& r) { return !r.guards; });
      return rows.empty() || all_failed ? 1 : 0;
    }

    if (*render) {
      const PolygonFile f = read_polygon_file(render_in);
      std::vector<int> guards;
      if (!render_sol.empty()) guards = solution_from_json(nlohmann::json::parse(read_text(render_sol))).guards;
      for (int g : guards)
        if (g < 0 || static_cast<std::size_t>(g) >= f.polygon.size()) return fail("guard index out of range");
      write_text(render_out, render_svg(f.polygon, guards));
      return 0;
    }

    if (*verify) {
      const PolygonFile f = read_polygon_file(verify_in);
      validate(f.polygon);
      std::vector<int> guards = verify_guards;
      std::optional<Arrangement> sol_arr;
      if (!verify_sol.empty()) {
        const GuardSolution s = solution_from_json(nlohmann::json::parse(read_text(verify_sol)));
        guards = s.guards;
        sol_arr = s.arrangement;
      }
      if (guards.empty()) return fail("give --solution or --guards");
      VerifyOptions vo;
      vo.mc_samples = verify_samples;
      vo.seed = verify_seed;
      vo.arrangement = verify_arr == "auto" && sol_arr ? sol_arr : parse_arrangement(verify_arr, f.polygon.size());
      const Coverage mode = verify_mode == "vertices" ? Coverage::Vertices : Coverage::Components;
      const CoverageReport rep = verify_coverage(f.polygon, guards, mode, vo);
      if (verify_json) {
        nlohmann::json j{{"pass", rep.pass},
                         {"mode", to_string(mode)},
                         {"reason", rep.reason},
                         {"components_checked", rep.components_checked},
                         {"vertices_checked", rep.vertices_checked},
                         {"samples_checked", rep.samples_checked}};
        if (rep.counterexample) j["counterexample"] = {rep.counterexample->x, rep.counterexample->y};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (rep.pass ? "pass" : "FAIL") << ' ' << to_string(mode);
        if (!rep.pass) {
          std::cout << ": " << rep.reason;
          if (rep.counterexample)
            std::cout << " at (" << fmt(rep.counterexample->x, 17) << ", " << fmt(rep.counterexample->y, 17) << ")";
        }
        std::cout << '\n';
      }
      return rep.pass ? 0 : 2;
    }
  } catch (const std::exception& e) {
    return fail(error_kind(e) + ": " + e.what());
  }
  return 0;
}
