#pragma once
// Weak visibility from a polygon edge: instance type and validator.

#include "vguard/component_visibility.hpp"
#include "vguard/sampling.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace vguard {

class NonWeakVisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polygon together with the edge uv it is weakly visible from. The pair is
/// ordered so that walking the boundary clockwise from u reaches v last, i.e.
/// bd_c(u, v) is the whole boundary chain other than the edge itself.
struct WeakVisInstance {
  Polygon polygon;
  int u = 0;
  int v = 0;
  bool validated = false;

  std::size_t size() const { return polygon.size(); }

  /// Vertex indices in clockwise order from u to v.
  std::vector<int> clockwise_chain() const {
    const std::size_t n = polygon.size();
    std::vector<int> out;
    out.reserve(n);
    std::size_t i = static_cast<std::size_t>(u);
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(static_cast<int>(i));
      i = polygon.is_ccw() ? polygon.prev(i) : polygon.next(i);
    }
    return out;
  }

  /// Index of the boundary edge between u and v.
  std::size_t edge_index() const {
    return polygon.next(static_cast<std::size_t>(u)) == static_cast<std::size_t>(v) ? static_cast<std::size_t>(u)
                                                                                   : static_cast<std::size_t>(v);
  }
};

/// Order an adjacent vertex pair as (u, v) for a WeakVisInstance.
inline WeakVisInstance make_instance(Polygon poly, int a, int b) {
  const std::size_t n = poly.size();
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
    throw std::invalid_argument("weak visibility edge index out of range");
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  if (poly.next(ua) != ub && poly.next(ub) != ua)
    throw std::invalid_argument("weak visibility edge must join adjacent vertices");
  // u is the endpoint whose counter-clockwise successor is the other one.
  const std::size_t ccw_next_a = poly.is_ccw() ? poly.next(ua) : poly.prev(ua);
  WeakVisInstance inst;
  inst.u = ccw_next_a == ub ? a : b;
  inst.v = ccw_next_a == ub ? b : a;
  inst.polygon = std::move(poly);
  return inst;
}

struct WeakVisCheckOptions {
  int edge_samples = 64;
  std::size_t mc_samples = 10'000;
  std::uint64_t seed = 1;
  // Component corner check; by default only when n is small enough for the
  // full decomposition to be cheap.
  std::optional<bool> component_check;
  std::size_t component_check_max_n = 40;
  Arrangement component_arrangement = Arrangement::Windows;
};

struct WeakVisReport {
  bool pass = true;
  std::string reason;
  std::optional<Point> witness;
  std::size_t points_checked = 0;
};

/// Does x see at least one point of boundary edge e?
///
/// The visible part of e is a union of closed intervals bounded by the edge
/// endpoints and by the rays from x through polygon vertices, so testing the
/// endpoints, even samples, those critical parameters and the midpoints
/// between consecutive criticals decides the question.
inline bool point_sees_edge(const Polygon& poly, std::size_t e, const XPoint& x, const Location& lx,
                            int samples = 64) {
  const std::size_t e1 = poly.next(e);
  const Point u = poly[e], v = poly[e1];
  if (lx.vertex == static_cast<int>(e) || lx.vertex == static_cast<int>(e1) || lx.edge == static_cast<int>(e))
    return true;
  if (vertex_sees(poly, static_cast<int>(e), x, lx) || vertex_sees(poly, static_cast<int>(e1), x, lx)) return true;
  const Location on_edge{Containment::Boundary, -1, static_cast<int>(e)};
  auto try_t = [&](double t) { return sees(poly, XPoint::lerp(u, v, t), on_edge, x, lx); };
  for (int k = 1; k <= samples; ++k)
    if (try_t(static_cast<double>(k) / (samples + 1))) return true;

  const Point xp = x.approx();
  std::vector<double> ts{0.0, 1.0};
  for (std::size_t w = 0; w < poly.size(); ++w) {
    if (w == e || w == e1) continue;
    const Point dir = poly[w] - xp;
    const double den = cross(v - u, dir);
    if (den == 0.0) continue;
    const double t = cross(xp - u, dir) / den;
    if (t > 0.0 && t < 1.0) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t k = 1; k + 1 < ts.size(); ++k)
    if (try_t(ts[k])) return true;
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    const double mid = 0.5 * (ts[k] + ts[k + 1]);
    if (mid > 0.0 && mid < 1.0 && try_t(mid)) return true;
  }
  return false;
}

/// Checks that every point of the polygon sees some point of edge (a, b):
/// all vertices, all component corners (when enabled) and a Monte Carlo
/// sample of interior points.
inline WeakVisReport validate_weakvis(const Polygon& poly, int a, int b, const WeakVisCheckOptions& opt = {}) {
  WeakVisReport rep;
  if (auto d = simplicity_defect(poly); !d.empty()) {
    rep.pass = false;
    rep.reason = "not simple: " + d;
    return rep;
  }
  const WeakVisInstance inst = make_instance(poly, a, b);
  const std::size_t e = inst.edge_index();

  auto fail = [&](const std::string& why, Point w) {
    rep.pass = false;
    rep.reason = why;
    rep.witness = w;
    return rep;
  };

  for (std::size_t i = 0; i < poly.size(); ++i) {
    ++rep.points_checked;
    if (!point_sees_edge(poly, e, XPoint(poly[i]), vertex_location(static_cast<int>(i)), opt.edge_samples))
      return fail("vertex " + std::to_string(i) + " sees no point of the edge", poly[i]);
  }

  const bool components = opt.component_check.value_or(poly.size() <= opt.component_check_max_n);
  if (components) {
    DecomposeOptions dopt;
    dopt.arrangement = opt.component_arrangement;
    const ConvexDecomposition d = decompose(poly, dopt);
    const CornerTable table(d);
    for (std::size_t k = 0; k < table.size(); ++k) {
      ++rep.points_checked;
      const int id = static_cast<int>(k);
      if (!point_sees_edge(poly, e, table.point(id), table.location(id), opt.edge_samples))
        return fail("component corner sees no point of the edge", table.point(id).approx());
    }
  }

  if (opt.mc_samples > 0) {
    for (const Point& p : sample_interior(poly, opt.mc_samples, opt.seed)) {
      ++rep.points_checked;
      const XPoint xp(p);
      if (!point_sees_edge(poly, e, xp, Location{Containment::Interior, -1, -1}, opt.edge_samples))
        return fail("interior point sees no point of the edge", p);
    }
  }
  return rep;
}

inline WeakVisReport validate_weakvis(const WeakVisInstance& inst, const WeakVisCheckOptions& opt = {}) {
  return validate_weakvis(inst.polygon, inst.u, inst.v, opt);
}

}  // namespace vguard
