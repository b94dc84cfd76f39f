#pragma once
// Vertex guard placement: greedy component cover, the weak-visibility
// 6-approximation, the reflex/greedy hybrid and an exhaustive oracle.

#include "vguard/component_visibility.hpp"
#include "vguard/geodesic.hpp"
#include "vguard/sampling.hpp"
#include "vguard/weakvis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vguard {

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IterationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { Ghosh, WeakVis6, Hybrid, Optimal };
enum class Coverage { Components, Vertices };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Ghosh: return "ghosh";
    case Algorithm::WeakVis6: return "weakvis6";
    case Algorithm::Hybrid: return "hybrid";
    case Algorithm::Optimal: return "optimal";
  }
  return "?";
}

inline const char* to_string(Coverage c) { return c == Coverage::Components ? "components" : "vertices"; }

inline const char* to_string(Arrangement a) { return a == Arrangement::Windows ? "windows" : "lines"; }

struct GuardSolution {
  Algorithm algorithm = Algorithm::Ghosh;
  std::vector<int> guards;  // ascending
  std::vector<Point> guard_points;
  std::vector<int> covered_components;
  std::vector<int> covered_vertices;
  double elapsed = 0.0;
  std::size_t iterations = 0;
  std::optional<Arrangement> arrangement;  // set when components were used
  std::map<std::string, std::string> meta;
  std::vector<std::string> trace;

  std::size_t size() const { return guards.size(); }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline void finish(GuardSolution& sol, const Polygon& poly, const VisibilityMap& vis) {
  std::sort(sol.guards.begin(), sol.guards.end());
  sol.guards.erase(std::unique(sol.guards.begin(), sol.guards.end()), sol.guards.end());
  sol.guard_points.clear();
  for (int g : sol.guards) sol.guard_points.push_back(poly[static_cast<std::size_t>(g)]);
  sol.covered_vertices.clear();
  for (std::size_t x = 0; x < poly.size(); ++x)
    for (int g : sol.guards)
      if (vis(static_cast<std::size_t>(g), x)) {
        sol.covered_vertices.push_back(static_cast<int>(x));
        break;
      }
}

inline std::vector<int> bits_to_ids(const Bitset& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Greedy cover of the convex components.

struct GhoshOptions {
  std::size_t cell_cap = 2'000'000;
  Arrangement arrangement = Arrangement::VertexPairLines;
  bool stop_when_vertices_covered = false;
};

inline GuardSolution solve_ghosh(const Polygon& poly, const GhoshOptions& opt = {}) {
  const auto t0 = detail::Clock::now();
  GuardSolution sol;
  sol.algorithm = Algorithm::Ghosh;
  sol.arrangement = opt.arrangement;

  DecomposeOptions dopt;
  dopt.cell_cap = opt.cell_cap;
  dopt.arrangement = opt.arrangement;
  const ConvexDecomposition d = decompose(poly, dopt);
  ComponentVisibility cv = build_component_visibility(poly, d);
  const std::size_t n = poly.size(), m = d.m();
  const VisibilityMap vis = vertex_visibility_matrix(poly);

  Bitset remaining(m);
  remaining.set();
  Bitset covered(m);
  std::vector<char> vertex_seen(n, 0);
  std::size_t vertices_left = n;
  std::vector<int> order;
  while (remaining.any()) {
    if (opt.stop_when_vertices_covered && vertices_left == 0) break;
    int best = -1;
    std::size_t best_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t c = (cv.sets[j] & remaining).count();
      if (c > best_count) {
        best_count = c;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) throw RobustnessFailure("solve_ghosh: remaining components are visible from no vertex");
    const Bitset picked = cv.sets[static_cast<std::size_t>(best)];
    remaining -= picked;
    covered |= picked;
    for (auto& f : cv.sets) f -= picked;
    order.push_back(best);
    sol.trace.push_back("pick " + std::to_string(best) + " covers " + std::to_string(best_count));
    for (std::size_t x = 0; x < n; ++x)
      if (!vertex_seen[x] && vis(static_cast<std::size_t>(best), x)) {
        vertex_seen[x] = 1;
        --vertices_left;
      }
    ++sol.iterations;
  }
  sol.guards = order;
  sol.covered_components = detail::bits_to_ids(covered);
  detail::finish(sol, poly, vis);
  sol.meta["order"] = detail::join(order);
  sol.meta["components"] = std::to_string(m);
  sol.meta["arrangement"] = to_string(opt.arrangement);
  sol.meta["stop"] = opt.stop_when_vertices_covered ? "vertices" : "components";
  sol.elapsed = detail::seconds_since(t0);
  return sol;
}

// ---------------------------------------------------------------------------
// 6-approximation for polygons weakly visible from an edge.

inline GuardSolution solve_weakvis6(const WeakVisInstance& inst, bool check_weak_visibility = true) {
  if (check_weak_visibility && !inst.validated) {
    const WeakVisReport rep = validate_weakvis(inst);
    if (!rep.pass) throw NonWeakVisible("solve_weakvis6: " + rep.reason);
  }
  const auto t0 = detail::Clock::now();
  const Polygon& poly = inst.polygon;
  const std::size_t n = poly.size();
  const VisibilityMap vis = vertex_visibility_matrix(poly);
  const ShortestPathTree tu = shortest_path_tree(poly, inst.u, vis);
  const ShortestPathTree tv = shortest_path_tree(poly, inst.v, vis);
  auto pu = [&](int z) { return tu.parent[static_cast<std::size_t>(z)]; };
  auto pv = [&](int z) { return tv.parent[static_cast<std::size_t>(z)]; };

  // Positions along bd_c(u, v): u is 0 and v is n - 1.
  const std::vector<int> chain = inst.clockwise_chain();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[static_cast<std::size_t>(chain[k])] = k;

  std::vector<char> marked(n, 0);
  std::size_t unmarked = n;
  auto mark_from = [&](int g) {
    std::size_t fresh = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (!marked[x] && vis(static_cast<std::size_t>(g), x)) {
        marked[x] = 1;
        --unmarked;
        ++fresh;
      }
    return fresh;
  };
  // Vertices of bd_c(a, b), walking clockwise (wrapping past v if needed).
  auto chain_between = [&](int a, int b, auto&& fn) {
    std::size_t k = pos[static_cast<std::size_t>(a)];
    const std::size_t end = pos[static_cast<std::size_t>(b)];
    for (;;) {
      if (!fn(chain[k])) return false;
      if (k == end) return true;
      k = (k + 1) % n;
    }
  };
  auto covered_by_pair = [&](int a, int b, int g1, int g2) {
    return chain_between(a, b, [&](int x) {
      const auto ux = static_cast<std::size_t>(x);
      return marked[ux] || vis(static_cast<std::size_t>(g1), ux) || vis(static_cast<std::size_t>(g2), ux);
    });
  };
  // First unmarked vertex at chain position >= from (or > from), or -1.
  auto first_unmarked_after = [&](std::size_t from, bool inclusive) {
    for (std::size_t k = inclusive ? from : from + 1; k < n; ++k)
      if (!marked[static_cast<std::size_t>(chain[k])]) return chain[k];
    return -1;
  };

  std::vector<int> B, S_B, Bp;
  std::vector<std::pair<int, int>> Sp_B;
  int z = inst.u;
  const std::size_t cap = n * n;
  GuardSolution sol;
  sol.algorithm = Algorithm::WeakVis6;
  sol.trace.push_back("fill(a): B' and S'_B start empty");

  while (unmarked > 0) {
    if (++sol.iterations > cap) throw IterationOverflow("solve_weakvis6: more than n^2 outer iterations");
    int next = first_unmarked_after(pos[static_cast<std::size_t>(z)], true);
    if (next < 0) next = first_unmarked_after(0, true);
    z = next;

    if (covered_by_pair(z, pv(z), pu(z), pv(z))) {
      B.push_back(z);
      S_B.push_back(pu(z));
      S_B.push_back(pv(z));
      mark_from(pu(z));
      mark_from(pv(z));
      sol.trace.push_back("B += " + std::to_string(z) + " (direct)");
      z = pv(z);
      continue;
    }

    int zp = first_unmarked_after(pos[static_cast<std::size_t>(z)], false);
    while (zp >= 0 && covered_by_pair(pu(zp), zp, pu(zp), pv(zp))) {
      z = zp;
      zp = first_unmarked_after(pos[static_cast<std::size_t>(zp)], false);
    }
    B.push_back(z);
    S_B.push_back(pu(z));
    S_B.push_back(pv(z));
    mark_from(pu(z));
    mark_from(pv(z));
    sol.trace.push_back("B += " + std::to_string(z) + " (advanced); fill(b): marked from its parents");

    for (;;) {
      int w = -1;
      for (std::size_t k = pos[static_cast<std::size_t>(z)] + 1; k-- > 0;)
        if (!marked[static_cast<std::size_t>(chain[k])]) {
          w = chain[k];
          break;
        }
      if (w < 0) break;
      Bp.push_back(w);
      Sp_B.emplace_back(pu(w), pv(w));
      mark_from(pu(w));
      mark_from(pv(w));
      sol.trace.push_back("B' += " + std::to_string(w));
    }
  }

  // Pruning: start from exactly the vertices S_B sees, then keep a B' pair
  // only if it marks something new, newest first.
  std::fill(marked.begin(), marked.end(), 0);
  unmarked = n;
  for (int g : S_B) mark_from(g);
  sol.trace.push_back("fill(d): marks reset to the vertices visible from S_B");
  std::vector<char> keep(Bp.size(), 0);
  for (std::size_t k = Bp.size(); k-- > 0;) {
    const std::size_t fresh = mark_from(Sp_B[k].first) + mark_from(Sp_B[k].second);
    keep[k] = fresh > 0;
    sol.trace.push_back(std::string(keep[k] ? "keep" : "prune") + " B' vertex " + std::to_string(Bp[k]));
  }
  std::vector<int> kept_Bp;
  sol.guards = S_B;
  for (std::size_t k = 0; k < Bp.size(); ++k) {
    if (!keep[k]) continue;
    kept_Bp.push_back(Bp[k]);
    sol.guards.push_back(Sp_B[k].first);
    sol.guards.push_back(Sp_B[k].second);
  }
  sol.trace.push_back("fill(c): result is S_B plus the kept S'_B pairs");
  detail::finish(sol, poly, vis);
  sol.meta["edge"] = std::to_string(inst.u) + "," + std::to_string(inst.v);
  sol.meta["B"] = detail::join(B);
  sol.meta["B_prime"] = detail::join(Bp);
  sol.meta["B_prime_kept"] = detail::join(kept_Bp);
  sol.elapsed = detail::seconds_since(t0);
  return sol;
}

// ---------------------------------------------------------------------------
// Reflex guards when reflex vertices are scarce, greedy cover otherwise.

struct HybridOptions {
  double c = 1.0;
  GhoshOptions ghosh{};
};

/// True when the rule places guards at the reflex vertices.
inline bool hybrid_uses_reflex(std::size_t n, std::size_t r, double c) {
  return static_cast<double>(r) - c <= std::log2(std::log2(static_cast<double>(n)));
}

inline GuardSolution solve_hybrid(const Polygon& poly, const HybridOptions& opt = {}) {
  const auto t0 = detail::Clock::now();
  const std::vector<int> reflex = reflex_vertices(poly);
  const std::size_t n = poly.size(), r = reflex.size();
  GuardSolution sol;
  std::string branch;
  if (r == 0) {
    sol.guards = {0};
    branch = "convex";
  } else if (hybrid_uses_reflex(n, r, opt.c)) {
    sol.guards = reflex;
    branch = "reflex";
  } else {
    sol = solve_ghosh(poly, opt.ghosh);
    branch = "ghosh";
  }
  if (branch != "ghosh") detail::finish(sol, poly, vertex_visibility_matrix(poly));
  sol.algorithm = Algorithm::Hybrid;
  sol.meta["branch"] = branch;
  sol.meta["c"] = std::to_string(opt.c);
  sol.meta["r"] = std::to_string(r);
  sol.elapsed = detail::seconds_since(t0);
  return sol;
}

// ---------------------------------------------------------------------------
// Exhaustive minimum vertex guard set for small polygons.

struct OptimalOptions {
  std::size_t max_n = 20;
  // Both arrangements give cells that are wholly visible or wholly hidden
  // from every vertex, so the feasible guard sets are the same.
  Arrangement arrangement = Arrangement::Windows;
};

/// Per-target masks of the vertices that see it, with dominated targets
/// removed: if every seer of A also sees B, covering A covers B.
inline std::vector<std::uint32_t> minimal_seer_masks(std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : masks) {
    bool dominated = false;
    for (std::uint32_t k : out)
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

inline GuardSolution solve_optimal(const Polygon& poly, Coverage coverage, const OptimalOptions& opt = {}) {
  const std::size_t n = poly.size();
  if (n > opt.max_n || n > 31) throw TooLarge("solve_optimal: " + std::to_string(n) + " vertices exceeds the cap");
  const auto t0 = detail::Clock::now();
  GuardSolution sol;
  sol.algorithm = Algorithm::Optimal;
  const VisibilityMap vis = vertex_visibility_matrix(poly);

  std::vector<std::uint32_t> masks;
  std::size_t m = 0;
  if (coverage == Coverage::Components) {
    DecomposeOptions dopt;
    dopt.arrangement = opt.arrangement;
    const ConvexDecomposition d = decompose(poly, dopt);
    const ComponentVisibility cv = build_component_visibility(poly, d);
    m = d.m();
    masks.assign(m, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (auto c = cv.sets[j].find_first(); c != Bitset::npos; c = cv.sets[j].find_next(c))
        masks[c] |= 1u << j;
    sol.arrangement = opt.arrangement;
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (vis(j, x)) mask |= 1u << j;
      masks.push_back(mask);
    }
  }
  const std::vector<std::uint32_t> need = minimal_seer_masks(std::move(masks));

  auto hits_all = [&](std::uint32_t s) {
    for (std::uint32_t k : need)
      if ((k & s) == 0) return false;
    return true;
  };
  // Combinations of size k in lexicographic order of their sorted indices.
  std::vector<int> idx;
  std::optional<std::uint32_t> found;
  for (std::size_t k = 1; k <= n && !found; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      ++sol.iterations;
      std::uint32_t s = 0;
      for (int i : idx) s |= 1u << i;
      if (hits_all(s)) {
        found = s;
        break;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  if (!found) throw RobustnessFailure("solve_optimal: no vertex set covers the polygon");
  for (std::size_t j = 0; j < n; ++j)
    if (*found >> j & 1u) sol.guards.push_back(static_cast<int>(j));
  if (coverage == Coverage::Components)
    for (std::size_t c = 0; c < m; ++c) sol.covered_components.push_back(static_cast<int>(c));
  detail::finish(sol, poly, vis);
  sol.meta["coverage"] = to_string(coverage);
  sol.meta["constraints"] = std::to_string(need.size());
  sol.elapsed = detail::seconds_since(t0);
  return sol;
}

// ---------------------------------------------------------------------------
// Independent coverage check.

struct VerifyOptions {
  std::size_t mc_samples = 10'000;
  std::uint64_t seed = 12345;
  std::optional<Arrangement> arrangement;  // default: the solution's, else lines
  std::size_t cell_cap = 2'000'000;
};

struct CoverageReport {
  bool pass = true;
  Coverage mode = Coverage::Components;
  std::string reason;
  std::optional<Point> counterexample;
  std::size_t components_checked = 0;
  std::size_t vertices_checked = 0;
  std::size_t samples_checked = 0;
};

inline CoverageReport verify_coverage(const Polygon& poly, const std::vector<int>& guards, Coverage mode,
                                      const VerifyOptions& opt = {}) {
  CoverageReport rep;
  rep.mode = mode;
  const std::size_t n = poly.size();
  for (int g : guards)
    if (g < 0 || static_cast<std::size_t>(g) >= n) {
      rep.pass = false;
      rep.reason = "guard index " + std::to_string(g) + " out of range";
      return rep;
    }
  if (guards.empty()) {
    rep.pass = false;
    rep.reason = "no guards";
    rep.counterexample = poly[0];
    return rep;
  }
  auto fail = [&](std::string why, Point p) {
    rep.pass = false;
    rep.reason = std::move(why);
    rep.counterexample = p;
    return rep;
  };

  if (mode == Coverage::Components) {
    DecomposeOptions dopt;
    dopt.cell_cap = opt.cell_cap;
    dopt.arrangement = opt.arrangement.value_or(Arrangement::VertexPairLines);
    const ConvexDecomposition d = decompose(poly, dopt);
    const CornerTable table(d);
    std::vector<std::vector<std::int8_t>> seen(guards.size(), std::vector<std::int8_t>(table.size(), -1));
    for (std::size_t c = 0; c < d.m(); ++c) {
      ++rep.components_checked;
      bool ok = false;
      for (std::size_t gi = 0; gi < guards.size() && !ok; ++gi) {
        ok = true;
        for (int id : table.corners_of(c)) {
          auto& s = seen[gi][static_cast<std::size_t>(id)];
          if (s < 0) s = table.vertex(id) == guards[gi] || vertex_sees(poly, guards[gi], table.point(id), table.location(id));
          if (!s) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) return fail("component " + std::to_string(c) + " is not totally visible from any guard",
                           d.components[c].representative);
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      ++rep.vertices_checked;
      bool ok = false;
      for (int g : guards)
        if (g == static_cast<int>(x) ||
            vertex_sees(poly, g, XPoint(poly[x]), vertex_location(static_cast<int>(x)))) {
          ok = true;
          break;
        }
      if (!ok) return fail("vertex " + std::to_string(x) + " is seen by no guard", poly[x]);
    }
  }

  if (opt.mc_samples > 0) {
    const Location inside{Containment::Interior, -1, -1};
    for (const Point& p : sample_interior(poly, opt.mc_samples, opt.seed)) {
      ++rep.samples_checked;
      const XPoint xp(p);
      bool ok = false;
      for (int g : guards)
        if (vertex_sees(poly, g, xp, inside)) {
          ok = true;
          break;
        }
      if (!ok) return fail("interior point is seen by no guard", p);
    }
  }
  return rep;
}

inline CoverageReport verify_coverage(const Polygon& poly, const GuardSolution& sol, Coverage mode,
                                      VerifyOptions opt = {}) {
  if (!opt.arrangement) opt.arrangement = sol.arrangement;
  return verify_coverage(poly, sol.guards, mode, opt);
}

/// Coverage notion each algorithm guarantees.
inline Coverage applicable_coverage(Algorithm a) {
  return a == Algorithm::WeakVis6 ? Coverage::Vertices : Coverage::Components;
}

}  // namespace vguard
