#pragma once
// Polygon data model and structural predicates.

#include "vguard/exact.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vguard {

enum class Orientation { CCW, CW, Collinear };

inline Orientation orient(const XPoint& a, const XPoint& b, const XPoint& c) {
  const int s = orient_sign(a, b, c);
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

struct Segment {
  Point a;
  Point b;
};

class InvalidPolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A simple polygon given as a vertex ring with an implicit closing edge.
/// The ring is stored as supplied; orientation is derived once and cached.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
    double twice = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) twice += cross(v_[i], v_[(i + 1) % v_.size()]);
    ccw_ = twice >= 0.0;
  }

  std::size_t size() const { return v_.size(); }
  const Point& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Point>& vertices() const { return v_; }

  std::size_t next(std::size_t i) const { return i + 1 == v_.size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? v_.size() - 1 : i - 1; }

  Orientation orientation() const { return ccw_ ? Orientation::CCW : Orientation::CW; }
  bool is_ccw() const { return ccw_; }
  // +1 for CCW rings, -1 for CW: multiply an orient sign by this to get
  // "left of the boundary == interior side".
  int interior_sign() const { return ccw_ ? 1 : -1; }

  Segment edge(std::size_t i) const { return {v_[i], v_[next(i)]}; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.v_ == b.v_; }

 private:
  std::vector<Point> v_;
  bool ccw_ = true;
};

/// Ring reversed so that the result is counter-clockwise. Index i of the input
/// maps to index ccw_index(i) of the output.
inline Polygon normalized_ccw(const Polygon& poly) {
  if (poly.is_ccw()) return poly;
  std::vector<Point> pts(poly.vertices().rbegin(), poly.vertices().rend());
  return Polygon(std::move(pts));
}

inline bool segments_properly_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orient_sign(s1.a, s1.b, s2.a);
  const int o2 = orient_sign(s1.a, s1.b, s2.b);
  if (o1 * o2 >= 0) return false;
  const int o3 = orient_sign(s2.a, s2.b, s1.a);
  const int o4 = orient_sign(s2.a, s2.b, s1.b);
  return o3 * o4 < 0;
}

/// Closed intersection test: touching and collinear overlap count.
inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orient_sign(s1.a, s1.b, s2.a);
  const int o2 = orient_sign(s1.a, s1.b, s2.b);
  const int o3 = orient_sign(s2.a, s2.b, s1.a);
  const int o4 = orient_sign(s2.a, s2.b, s1.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_closed(s1.a, s1.b, s2.a)) return true;
  if (o2 == 0 && within_closed(s1.a, s1.b, s2.b)) return true;
  if (o3 == 0 && within_closed(s2.a, s2.b, s1.a)) return true;
  if (o4 == 0 && within_closed(s2.a, s2.b, s1.b)) return true;
  return false;
}

enum class Containment { Interior, Boundary, Exterior };

/// Where a point sits relative to the boundary. `vertex` is set when the point
/// coincides with a polygon vertex, otherwise `edge` when it lies in the
/// relative interior of an edge.
struct Location {
  Containment where = Containment::Exterior;
  int vertex = -1;
  int edge = -1;
};

inline Location locate_point(const Polygon& poly, const XPoint& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (same_point(poly[i], p)) return {Containment::Boundary, static_cast<int>(i), -1};
  }
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const XPoint s = poly[i];
    const XPoint t = poly[poly.next(i)];
    const int o = orient_sign(s, t, p);
    if (o == 0 && strictly_between(s, t, p)) return {Containment::Boundary, -1, static_cast<int>(i)};
    const int sy = compare_y(s, p);
    const int ty = compare_y(t, p);
    if (sy <= 0 && ty > 0 && o > 0) ++winding;
    if (ty <= 0 && sy > 0 && o < 0) --winding;
  }
  return {winding != 0 ? Containment::Interior : Containment::Exterior, -1, -1};
}

inline Containment point_in_polygon(const XPoint& p, const Polygon& poly) {
  return locate_point(poly, p).where;
}

/// Full structural validation. Returns an empty string when the ring is a
/// valid simple polygon, otherwise a description of the first defect.
inline std::string simplicity_defect(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return "fewer than 3 vertices";
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(poly[i].x) || !std::isfinite(poly[i].y))
      return "non-finite coordinate at vertex " + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (poly[i] == poly[j])
        return "duplicate vertices " + std::to_string(i) + " and " + std::to_string(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (orient_sign(poly[poly.prev(i)], poly[i], poly[poly.next(i)]) == 0)
      return "collinear consecutive vertices around " + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == poly.next(i) || i == poly.next(j)) continue;
      if (segments_intersect(poly.edge(i), poly.edge(j)))
        return "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
    }
  }
  return {};
}

inline bool is_simple(const Polygon& poly) { return simplicity_defect(poly).empty(); }

inline void validate(const Polygon& poly) {
  if (auto d = simplicity_defect(poly); !d.empty()) throw InvalidPolygon("polygon is not simple: " + d);
}

inline bool is_reflex(const Polygon& poly, std::size_t i) {
  return orient_sign(poly[poly.prev(i)], poly[i], poly[poly.next(i)]) * poly.interior_sign() < 0;
}

inline std::vector<int> reflex_vertices(const Polygon& poly) {
  std::vector<int> out;
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (is_reflex(poly, i)) out.push_back(static_cast<int>(i));
  return out;
}

inline double signed_area(const std::vector<Point>& ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  return 0.5 * twice;
}

inline double polygon_area(const Polygon& poly) { return std::abs(signed_area(poly.vertices())); }

}  // namespace vguard
