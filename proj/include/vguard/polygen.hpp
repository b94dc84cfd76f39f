#pragma once
// Random polygon generators: weak visibility polygons hung from a base
// segment, convex polygons, and simple polygons with a prescribed number of
// reflex vertices.

#include "vguard/sampling.hpp"
#include "vguard/weakvis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vguard {

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DentTriangulation { Zigzag, Fan };

struct GenConfig {
  std::uint64_t seed = 1;
  int n = 10;                 // spokes (weak visibility) or convex vertices (simple)
  double k = 100.0;           // half-length of the base segment pq
  int r_target = 0;           // reflex vertices requested from gen_simple
  std::pair<double, double> radius_range{20.0, 100.0};
  std::pair<double, double> weight_range{0.1, 1.0};
  double angle_margin = 0.05;  // spoke angles drawn from (margin, pi - margin)
  std::optional<int> dents;    // weak visibility: gaps that receive a z point (default all)
  int max_attempts = 100;
  int max_dents_per_triangle = 3;
  DentTriangulation triangulation = DentTriangulation::Zigzag;
  bool validate = true;
  WeakVisCheckOptions weakvis_check{};

  void check() const {
    if (n < 1) throw std::invalid_argument("GenConfig: n must be positive");
    if (!(k > 0.0)) throw std::invalid_argument("GenConfig: k must be positive");
    if (r_target < 0) throw std::invalid_argument("GenConfig: r_target must be non-negative");
    if (!(radius_range.first > 0.0) || radius_range.second < radius_range.first)
      throw std::invalid_argument("GenConfig: bad radius_range");
    if (!(weight_range.first > 0.0) || weight_range.second < weight_range.first)
      throw std::invalid_argument("GenConfig: bad weight_range");
  }
};

// ---------------------------------------------------------------------------
// Weak visibility polygons.

namespace detail {

// Parameter along ray (o1, d1) where it first meets ray (o2, d2), or +inf.
inline double ray_meet(Point o1, Point d1, Point o2, Point d2) {
  const double den = cross(d1, d2);
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  const Point w = o2 - o1;
  const double s = cross(w, d2) / den;
  const double t = cross(w, d1) / den;
  return s > 0.0 && t > 0.0 ? s : std::numeric_limits<double>::infinity();
}

inline bool strictly_convex_quad(Point a, Point b, Point c, Point d) {
  const std::array<Point, 4> q{a, b, c, d};
  int s = 0;
  for (int i = 0; i < 4; ++i) {
    const int o = orient_sign(q[i], q[(i + 1) % 4], q[(i + 2) % 4]);
    if (o == 0 || (s != 0 && o != s)) return false;
    s = o;
  }
  return true;
}

}  // namespace detail

/// Ring q y1 z1 y2 ... y_n p, weakly visible from its closing edge pq.
///
/// Spoke feet x_i are uniform on pq ordered by decreasing distance from p,
/// angles are uniform and decreasing, and y_i = x_i - r_i (cos a_i, sin a_i).
/// Each r_i is drawn from radius_range and then capped at 0.9 of the distance
/// to the nearest crossing with another spoke ray, which keeps every
/// quadrilateral x_i y_i y_{i+1} x_{i+1} convex. z_i is a positive weighted
/// mean of that quadrilateral's corners.
inline WeakVisInstance gen_weakvis(const GenConfig& cfg) {
  cfg.check();
  const int n = cfg.n;
  const int gaps = n - 1;
  const int dents = cfg.dents.value_or(gaps);
  if (dents < 0 || dents > gaps) throw std::invalid_argument("gen_weakvis: dents must lie in [0, n-1]");
  const double pi = std::numbers::pi;
  const Point p{cfg.k, 0.0}, q{-cfg.k, 0.0};
  std::string last_reason = "no attempt made";

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(attempt)));
    std::vector<double> xs(n), alphas(n), radii(n);
    for (auto& x : xs) x = rng.uniform(-cfg.k, cfg.k);
    for (auto& a : alphas) a = rng.uniform(cfg.angle_margin, pi - cfg.angle_margin);
    for (auto& r : radii) r = rng.uniform(cfg.radius_range.first, cfg.radius_range.second);
    std::sort(xs.begin(), xs.end());
    std::sort(alphas.begin(), alphas.end(), std::greater<>());

    std::vector<Point> feet(n), dirs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      feet[i] = {xs[i], 0.0};
      dirs[i] = {-std::cos(alphas[i]), -std::sin(alphas[i])};
    }
    for (int i = 0; i < n; ++i) {
      double cap = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j)
        if (j != i) cap = std::min(cap, detail::ray_meet(feet[i], dirs[i], feet[j], dirs[j]));
      radii[i] = std::min(radii[i], 0.9 * cap);
      ys[i] = feet[i] + radii[i] * dirs[i];
    }

    std::vector<char> dented(std::max(gaps, 0), 1);
    if (dents < gaps) {
      std::vector<int> order(gaps);
      for (int i = 0; i < gaps; ++i) order[i] = i;
      for (int i = gaps - 1; i > 0; --i) std::swap(order[i], order[rng.index(static_cast<std::size_t>(i) + 1)]);
      std::fill(dented.begin(), dented.end(), 0);
      for (int i = 0; i < dents; ++i) dented[order[i]] = 1;
    }

    bool quads_ok = true;
    std::vector<Point> ring{q};
    for (int i = 0; i < n; ++i) {
      ring.push_back(ys[i]);
      if (i + 1 == n) break;
      if (!detail::strictly_convex_quad(feet[i], ys[i], ys[i + 1], feet[i + 1])) quads_ok = false;
      std::array<double, 4> w;
      for (auto& wi : w) wi = rng.uniform(cfg.weight_range.first, cfg.weight_range.second);
      if (!dented[i]) continue;
      const double sw = w[0] + w[1] + w[2] + w[3];
      ring.push_back((1.0 / sw) * (w[0] * feet[i] + w[1] * ys[i] + w[2] * ys[i + 1] + w[3] * feet[i + 1]));
    }
    ring.push_back(p);
    if (!quads_ok) {
      last_reason = "spoke quadrilateral not convex";
      continue;
    }

    Polygon poly(std::move(ring));
    if (auto d = simplicity_defect(poly); !d.empty()) {
      last_reason = "not simple: " + d;
      continue;
    }
    WeakVisInstance inst = make_instance(poly, static_cast<int>(poly.size() - 1), 0);
    if (cfg.validate) {
      WeakVisCheckOptions chk = cfg.weakvis_check;
      chk.seed = mix_seed(cfg.seed, 0xC0FFEE + static_cast<std::uint64_t>(attempt));
      const WeakVisReport rep = validate_weakvis(inst, chk);
      if (!rep.pass) {
        last_reason = rep.reason;
        continue;
      }
      inst.validated = true;
    }
    return inst;
  }
  throw GenerationFailed("gen_weakvis: " + std::to_string(cfg.max_attempts) + " attempts failed; last: " + last_reason);
}

// ---------------------------------------------------------------------------
// Convex polygons.

/// Points on a circle at sorted random angles with a small radial jitter;
/// draws that are not strictly convex are redrawn, the last attempt without
/// jitter.
inline Polygon gen_convex(int n, std::uint64_t seed, double radius = 100.0) {
  if (n < 3) throw std::invalid_argument("gen_convex: n must be at least 3");
  const double two_pi = 2.0 * std::numbers::pi;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng(mix_seed(seed, 0xC0 + static_cast<std::uint64_t>(attempt)));
    std::vector<double> ang(n);
    for (auto& a : ang) a = rng.uniform(0.0, two_pi);
    std::sort(ang.begin(), ang.end());
    double min_gap = two_pi - ang.back() + ang.front();
    for (int i = 1; i < n; ++i) min_gap = std::min(min_gap, ang[i] - ang[i - 1]);
    if (min_gap < 0.2 * two_pi / n) continue;
    const double jitter = attempt + 1 == 100 ? 0.0 : 0.05;
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
      const double r = radius * (1.0 - jitter * rng.uniform());
      pts[i] = {r * std::cos(ang[i]), r * std::sin(ang[i])};
    }
    Polygon poly(std::move(pts));
    bool convex = true;
    for (std::size_t i = 0; i < poly.size() && convex; ++i)
      convex = orient_sign(poly[poly.prev(i)], poly[i], poly[poly.next(i)]) > 0;
    if (convex && is_simple(poly)) return poly;
  }
  // Regular polygon as a last resort.
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = {radius * std::cos(two_pi * i / n), radius * std::sin(two_pi * i / n)};
  return Polygon(std::move(pts));
}

// ---------------------------------------------------------------------------
// Simple polygons with r reflex vertices.

struct EarTriangle {
  int apex;
  int b;  // boundary edge b -> c, consecutive in ring order
  int c;
};

/// Triangulation of a convex ring in which every triangle owns a distinct
/// boundary edge.
inline std::vector<EarTriangle> boundary_triangulation(int n, DentTriangulation kind) {
  std::vector<EarTriangle> out;
  if (kind == DentTriangulation::Fan) {
    for (int i = 1; i + 1 < n; ++i) out.push_back({0, i, i + 1});
    return out;
  }
  int lo = 0, hi = n - 1;
  bool low_side = true;
  while (hi - lo >= 2) {
    if (low_side) {
      out.push_back({hi, lo, lo + 1});
      ++lo;
    } else {
      out.push_back({lo, hi - 1, hi});
      --hi;
    }
    low_side = !low_side;
  }
  return out;
}

inline std::size_t dent_capacity(const GenConfig& cfg) {
  return static_cast<std::size_t>(std::max(cfg.n - 2, 0)) * static_cast<std::size_t>(cfg.max_dents_per_triangle);
}

/// Convex polygon with r_target dents. Each dent point X lies inside a
/// triangle abc of a boundary triangulation and replaces boundary edge bc by
/// b X c; several points in one triangle form a concave chain ordered by
/// angle around the midpoint of bc.
inline Polygon gen_simple(const GenConfig& cfg) {
  cfg.check();
  if (cfg.n < 3) throw std::invalid_argument("gen_simple: n must be at least 3");
  if (static_cast<std::size_t>(cfg.r_target) > dent_capacity(cfg))
    throw std::invalid_argument("gen_simple: r_target exceeds dent capacity " + std::to_string(dent_capacity(cfg)));
  std::string last_reason = "no attempt made";

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const std::uint64_t sub = mix_seed(cfg.seed, 0x51 + static_cast<std::uint64_t>(attempt));
    const Polygon base = gen_convex(cfg.n, sub, cfg.k);
    Rng rng(mix_seed(sub, 7));
    const auto tris = boundary_triangulation(cfg.n, cfg.triangulation);

    std::vector<int> order(tris.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    std::vector<int> count(tris.size(), 0);
    for (int r = 0; r < cfg.r_target; ++r) ++count[order[static_cast<std::size_t>(r) % order.size()]];

    // Dent chains keyed by the boundary edge's first vertex.
    std::vector<std::vector<Point>> chain(cfg.n);
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const int m = count[t];
      if (m == 0) continue;
      const Point a = base[tris[t].apex], b = base[tris[t].b], c = base[tris[t].c];
      auto& out = chain[tris[t].b];
      if (m == 1) {
        double wa, wb, wc;
        do {
          double s1 = rng.uniform(), s2 = rng.uniform();
          if (s1 + s2 > 1.0) {
            s1 = 1.0 - s1;
            s2 = 1.0 - s2;
          }
          wa = s1;
          wb = s2;
          wc = 1.0 - s1 - s2;
        } while (std::min({wa, wb, wc}) < 0.02);
        out.push_back(wa * a + wb * b + wc * c);
        continue;
      }
      // Concave profile h = 4 H s (1 - s) in the affine frame (b; c - b, a - b).
      const double height = rng.uniform(0.08, 0.24);
      std::vector<double> ss(m);
      for (auto& s : ss) s = rng.uniform(0.1, 0.9);
      std::vector<Point> pts;
      for (double s : ss) {
        const double h = 4.0 * height * s * (1.0 - s);
        pts.push_back(b + s * (c - b) + h * (a - b));
      }
      const Point mid = 0.5 * (b + c);
      const Point axis = c - b;
      std::sort(pts.begin(), pts.end(), [&](Point u, Point v) {
        // Angle around the midpoint, measured from the direction of c.
        const double au = std::atan2(cross(axis, u - mid), dot(axis, u - mid));
        const double av = std::atan2(cross(axis, v - mid), dot(axis, v - mid));
        return std::abs(au) < std::abs(av);
      });
      out = std::move(pts);
      std::reverse(out.begin(), out.end());
    }

    std::vector<Point> ring;
    for (int i = 0; i < cfg.n; ++i) {
      ring.push_back(base[i]);
      for (const Point& x : chain[i]) ring.push_back(x);
    }
    Polygon poly(std::move(ring));
    if (auto d = simplicity_defect(poly); !d.empty()) {
      last_reason = "not simple: " + d;
      continue;
    }
    if (cfg.validate && reflex_vertices(poly).size() != static_cast<std::size_t>(cfg.r_target)) {
      last_reason = "reflex count mismatch";
      continue;
    }
    return poly;
  }
  throw GenerationFailed("gen_simple: " + std::to_string(cfg.max_attempts) + " attempts failed; last: " + last_reason);
}

}  // namespace vguard
