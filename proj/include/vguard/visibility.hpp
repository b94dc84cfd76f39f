#pragma once
// Closed visibility inside a simple polygon and the vertex visibility graph.
//
// Two points see each other when the segment between them never enters the
// exterior. Grazing a reflex vertex or running along an edge is allowed.

#include "vguard/geom.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vguard {

/// Does the closed interior cone at vertex w contain the direction towards q?
inline bool cone_admits(const Polygon& poly, std::size_t w, const XPoint& q) {
  const int s = poly.interior_sign();
  const XPoint pw = poly[w];
  const int out = orient_sign(pw, poly[poly.next(w)], q) * s;
  const int in = orient_sign(poly[poly.prev(w)], pw, q) * s;
  if (is_reflex(poly, w)) return out >= 0 || in >= 0;
  return out >= 0 && in >= 0;
}

namespace detail {

// Does the sub-segment that starts at `from` (with boundary location `loc`)
// and heads towards `to` begin inside the closed polygon?
inline bool leaves_inward(const Polygon& poly, const Location& loc, const XPoint& to) {
  if (loc.where == Containment::Interior) return true;
  if (loc.vertex >= 0) return cone_admits(poly, static_cast<std::size_t>(loc.vertex), to);
  const auto e = static_cast<std::size_t>(loc.edge);
  return orient_sign(XPoint(poly[e]), XPoint(poly[poly.next(e)]), to) * poly.interior_sign() >= 0;
}

}  // namespace detail

/// Visibility between two points whose locations are already known.
inline bool sees(const Polygon& poly, const XPoint& a, const Location& la, const XPoint& b,
                 const Location& lb) {
  if (la.where == Containment::Exterior || lb.where == Containment::Exterior)
    throw std::invalid_argument("sees: query point lies outside the polygon");
  if (la.vertex >= 0 && la.vertex == lb.vertex) return true;
  if (same_point(a, b)) return true;

  const std::size_t n = poly.size();
  thread_local std::vector<int> side;
  side.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == la.vertex || static_cast<int>(i) == lb.vertex)
      side[i] = 0;
    else
      side[i] = orient_sign(a, b, XPoint(poly[i]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = poly.next(i);
    if (side[i] * side[j] >= 0) continue;
    const XPoint s = poly[i], t = poly[j];
    const int oa = orient_sign(s, t, a);
    const int ob = orient_sign(s, t, b);
    if (oa * ob < 0) return false;
  }

  // Polygon vertices strictly inside ab split it into pieces whose interiors
  // avoid the boundary; each piece is either inside or outside as a whole.
  thread_local std::vector<int> touches;
  touches.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (side[i] != 0 || static_cast<int>(i) == la.vertex || static_cast<int>(i) == lb.vertex) continue;
    if (strictly_between(a, b, XPoint(poly[i]))) touches.push_back(static_cast<int>(i));
  }
  if (touches.size() > 1) {
    const int dx = compare_x(b, a);
    const bool use_x = dx != 0;
    const int dir = use_x ? dx : compare_y(b, a);
    std::sort(touches.begin(), touches.end(), [&](int p, int q) {
      const double kp = use_x ? poly[p].x : poly[p].y;
      const double kq = use_x ? poly[q].x : poly[q].y;
      return dir > 0 ? kp < kq : kp > kq;
    });
  }

  Location at = la;
  for (int w : touches) {
    if (!detail::leaves_inward(poly, at, XPoint(poly[w]))) return false;
    at = Location{Containment::Boundary, w, -1};
  }
  return detail::leaves_inward(poly, at, b);
}

inline bool sees(const Polygon& poly, const XPoint& a, const XPoint& b) {
  return sees(poly, a, locate_point(poly, a), b, locate_point(poly, b));
}

inline Location vertex_location(int i) { return {Containment::Boundary, i, -1}; }

/// Visibility from polygon vertex i to an arbitrary located point.
inline bool vertex_sees(const Polygon& poly, int i, const XPoint& b, const Location& lb) {
  return sees(poly, XPoint(poly[static_cast<std::size_t>(i)]), vertex_location(i), b, lb);
}

/// Vertex visibility graph as a dense symmetric matrix.
class VisibilityMap {
 public:
  VisibilityMap() = default;
  explicit VisibilityMap(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) {
    adj_[i * n_ + j] = v;
    adj_[j * n_ + i] = v;
  }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) e += adj_[i * n_ + j];
    return e;
  }
  std::vector<int> visible_from(std::size_t i) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j)) out.push_back(static_cast<int>(j));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

inline VisibilityMap vertex_visibility_matrix(const Polygon& poly) {
  const std::size_t n = poly.size();
  VisibilityMap vis(n);
  for (std::size_t i = 0; i < n; ++i) {
    vis.set(i, i, true);
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool v = sees(poly, XPoint(poly[i]), vertex_location(static_cast<int>(i)), XPoint(poly[j]),
                          vertex_location(static_cast<int>(j)));
      vis.set(i, j, v);
    }
  }
  return vis;
}

}  // namespace vguard
