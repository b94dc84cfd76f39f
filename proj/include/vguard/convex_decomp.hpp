#pragma once
// Convex components induced by the lines through every pair of vertices.
//
// The polygon is triangulated and every triangle is then recursively split
// by each cut that crosses it. A cut is either a whole vertex-pair line or,
// in the window arrangement, the chord that continues a sight line past a
// reflex vertex until it leaves the polygon. Cell corners are kept symbolically
// (a polygon vertex, or the meeting point of two cutting lines) so every
// side-of-line decision is exact.

#include "vguard/geodesic.hpp"
#include "vguard/geom.hpp"
#include "vguard/visibility.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vguard {

class DecompositionOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RobustnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line through two or more polygon vertices. `a < b` are the two lowest
/// vertex indices on it; `on` lists every vertex on the line, ascending.
struct CuttingLine {
  int a = 0;
  int b = 0;
  std::vector<int> on;
};

class LineSet {
 public:
  LineSet() = default;
  explicit LineSet(const Polygon& poly) : n_(poly.size()), by_pair_(n_ * n_, -1) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (by_pair_[i * n_ + j] >= 0) continue;
        CuttingLine line{static_cast<int>(i), static_cast<int>(j), {}};
        for (std::size_t k = 0; k < n_; ++k)
          if (k == i || k == j || orient_sign(poly[i], poly[j], poly[k]) == 0) line.on.push_back(static_cast<int>(k));
        const int id = static_cast<int>(lines_.size());
        for (int p : line.on)
          for (int q : line.on) by_pair_[static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(q)] = id;
        lines_.push_back(std::move(line));
      }
    }
  }

  std::size_t size() const { return lines_.size(); }
  const CuttingLine& operator[](std::size_t id) const { return lines_[id]; }
  const std::vector<CuttingLine>& lines() const { return lines_; }
  int through(int p, int q) const { return by_pair_[static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(q)]; }

  bool contains(int line, int vertex) const {
    const auto& on = lines_[static_cast<std::size_t>(line)].on;
    return std::binary_search(on.begin(), on.end(), vertex);
  }

  /// Shared polygon vertex of two distinct lines, or -1.
  int common_vertex(int l1, int l2) const {
    const auto& a = lines_[static_cast<std::size_t>(l1)].on;
    const auto& b = lines_[static_cast<std::size_t>(l2)].on;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return a[i];
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return -1;
  }

 private:
  std::size_t n_ = 0;
  std::vector<CuttingLine> lines_;
  std::vector<int> by_pair_;
};

inline std::vector<CuttingLine> cutting_lines(const Polygon& poly) { return LineSet(poly).lines(); }

/// Symbolic cell corner: a polygon vertex (vertex >= 0) or the meeting point
/// of cutting lines l1 < l2.
struct Corner {
  int vertex = -1;
  int l1 = -1;
  int l2 = -1;
  Point approx{};
  Interval ix{}, iy{};

  std::uint64_t key() const {
    if (vertex >= 0) return static_cast<std::uint64_t>(vertex);
    return (static_cast<std::uint64_t>(l1 + 1) << 32) | static_cast<std::uint64_t>(l2);
  }
};

struct ConvexComponent {
  int id = 0;
  Polygon boundary;  // CCW, approximate coordinates
  Point representative{};
  std::vector<Corner> corners;  // exact, CCW
};

enum class Arrangement {
  VertexPairLines,  // every line through two vertices
  Windows,          // only the visibility windows; far fewer cells
};

class ConvexDecomposition {
 public:
  std::vector<ConvexComponent> components;
  Polygon source;
  LineSet lines;
  Arrangement arrangement = Arrangement::VertexPairLines;

  std::size_t m() const { return components.size(); }

  XPoint point(const Corner& c) const {
    if (c.vertex >= 0) return XPoint(source[static_cast<std::size_t>(c.vertex)]);
    const auto& a = lines[static_cast<std::size_t>(c.l1)];
    const auto& b = lines[static_cast<std::size_t>(c.l2)];
    return XPoint::meet(source[a.a], source[a.b], source[b.a], source[b.b]);
  }
};

struct DecomposeOptions {
  std::size_t cell_cap = 2'000'000;
  bool check = true;  // convexity and area conservation
  Arrangement arrangement = Arrangement::VertexPairLines;
};

/// Part of a cutting line used as a cut. Unbounded cuts use the whole line;
/// a window runs from polygon vertex `from` to the point `to`.
struct Cut {
  int line = 0;
  bool bounded = false;
  int from = -1;
  XPoint to{};
};

namespace detail {

// Orientation of the continuation of the ray from `from` through vertex x
// against the two edges at x, without constructing the continuation point.
inline bool ray_continues_inward(const Polygon& poly, std::size_t x, Point from) {
  const int s = poly.interior_sign();
  const Point px = poly[x];
  const int out = -orient_sign(from, px, poly[poly.next(x)]) * s;
  const int in = -orient_sign(poly[poly.prev(x)], px, from) * s;
  if (is_reflex(poly, x)) return out >= 0 || in >= 0;
  return out >= 0 && in >= 0;
}

// Window cut from w along the ray v -> w, ending where it leaves the polygon.
inline std::optional<Cut> window_cut(const Polygon& poly, const LineSet& lines, int v, int w) {
  const std::size_t n = poly.size();
  const Point pv = poly[static_cast<std::size_t>(v)], pw = poly[static_cast<std::size_t>(w)];
  if (!ray_continues_inward(poly, static_cast<std::size_t>(w), pv)) return std::nullopt;
  const Point d = pw - pv;
  struct Event {
    double t;
    int vertex;
    int edge;
  };
  std::vector<Event> events;
  std::vector<int> side(n);
  for (std::size_t i = 0; i < n; ++i) side[i] = orient_sign(pv, pw, poly[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = dot(poly[i] - pw, d);
    if (side[i] == 0 && ti > 0.0) events.push_back({ti, static_cast<int>(i), -1});
    const std::size_t j = poly.next(i);
    if (side[i] * side[j] < 0) {
      const XPoint x = XPoint::meet(pv, pw, poly[i], poly[j]);
      const double tx = dot(x.approx() - pw, d);
      if (tx > 0.0) events.push_back({tx, -1, static_cast<int>(i)});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
  for (const Event& e : events) {
    if (e.edge >= 0) {
      const auto i = static_cast<std::size_t>(e.edge);
      return Cut{lines.through(v, w), true, w, XPoint::meet(pv, pw, poly[i], poly[poly.next(i)])};
    }
    if (!ray_continues_inward(poly, static_cast<std::size_t>(e.vertex), pv))
      return Cut{lines.through(v, w), true, w, XPoint(poly[static_cast<std::size_t>(e.vertex)])};
  }
  throw RobustnessFailure("window ray never leaves the polygon");
}

}  // namespace detail

/// Cuts for the requested arrangement.
inline std::vector<Cut> arrangement_cuts(const Polygon& poly, const LineSet& lines, Arrangement kind) {
  std::vector<Cut> cuts;
  if (kind == Arrangement::VertexPairLines) {
    for (std::size_t l = 0; l < lines.size(); ++l) cuts.push_back(Cut{static_cast<int>(l), false, -1, {}});
    return cuts;
  }
  const std::size_t n = poly.size();
  std::vector<std::uint64_t> seen;
  for (std::size_t w = 0; w < n; ++w) {
    if (!is_reflex(poly, w)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == w) continue;
      const int iv = static_cast<int>(v), iw = static_cast<int>(w);
      if (!sees(poly, XPoint(poly[v]), vertex_location(iv), XPoint(poly[w]), vertex_location(iw))) continue;
      auto cut = detail::window_cut(poly, lines, iv, iw);
      if (!cut) continue;
      // Vertices of the same line on the same side of w give the same window.
      const std::uint64_t dir = dot(poly[w] - poly[v], poly[static_cast<std::size_t>(lines[cut->line].b)] -
                                                          poly[static_cast<std::size_t>(lines[cut->line].a)]) > 0;
      const std::uint64_t key = (static_cast<std::uint64_t>(cut->line) << 33) | (w << 1) | dir;
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      cuts.push_back(std::move(*cut));
    }
  }
  return cuts;
}

namespace detail {

struct Cell {
  std::vector<Corner> corners;
  std::vector<int> edge_line;  // edge k runs corners[k] -> corners[k+1]
};

class Splitter {
 public:
  Splitter(const Polygon& poly, const LineSet& lines) : poly_(poly), lines_(lines) {}

  Corner vertex_corner(int v) const {
    const Point p = poly_[static_cast<std::size_t>(v)];
    return Corner{v, -1, -1, p, Interval(p.x), Interval(p.y)};
  }

  Corner meet_corner(int l1, int l2) const {
    if (const int v = lines_.common_vertex(l1, l2); v >= 0) return vertex_corner(v);
    if (l1 > l2) std::swap(l1, l2);
    const XPoint x = xpoint_of_lines(l1, l2);
    return Corner{-1, l1, l2, x.approx(), x.ix(), x.iy()};
  }

  XPoint xpoint_of_lines(int l1, int l2) const {
    const auto& a = lines_[static_cast<std::size_t>(l1)];
    const auto& b = lines_[static_cast<std::size_t>(l2)];
    return XPoint::meet(poly_[a.a], poly_[a.b], poly_[b.a], poly_[b.b]);
  }

  int side(int line, const Corner& c) const {
    const auto& l = lines_[static_cast<std::size_t>(line)];
    const Point pa = poly_[l.a], pb = poly_[l.b];
    if (c.vertex >= 0) {
      if (lines_.contains(line, c.vertex)) return 0;
      return orient_sign(pa, pb, c.approx);
    }
    if (c.l1 == line || c.l2 == line) return 0;
    const Interval ax(pa.x), ay(pa.y);
    const Interval d = (Interval(pb.x) - ax) * (c.iy - ay) - (Interval(pb.y) - ay) * (c.ix - ax);
    const int s = d.sign();
    if (s != 2) return s;
    return orient_sign(XPoint(pa), XPoint(pb), xpoint_of_lines(c.l1, c.l2));
  }

  // Signs of every corner against the cut's line; true iff the cut crosses
  // the cell interior. A window meets a cell either in the whole chord of the
  // line through the cell or not at all, so checking the two chord ends
  // decides it.
  bool classify(const Cell& cell, const Cut& cut, std::vector<int>& signs) const {
    const int line = cut.line;
    const std::size_t m = cell.corners.size();
    signs.resize(m);
    bool pos = false, neg = false;
    for (std::size_t k = 0; k < m; ++k) {
      signs[k] = side(line, cell.corners[k]);
      pos |= signs[k] > 0;
      neg |= signs[k] < 0;
    }
    if (!(pos && neg)) return false;
    if (!cut.bounded) return true;
    const XPoint from(poly_[static_cast<std::size_t>(cut.from)]);
    for (std::size_t k = 0; k < m; ++k) {
      const int sk = signs[k], s1 = signs[(k + 1) % m];
      if (sk == 0) {
        const Corner& c = cell.corners[k];
        const XPoint p = c.vertex >= 0 ? XPoint(poly_[static_cast<std::size_t>(c.vertex)]) : xpoint_of_lines(c.l1, c.l2);
        if (!within_closed(from, cut.to, p)) return false;
      } else if (sk * s1 < 0) {
        if (!within_closed(from, cut.to, xpoint_of_lines(line, cell.edge_line[k]))) return false;
      }
    }
    return true;
  }

  std::pair<Cell, Cell> split(const Cell& cell, const Cut& cut, const std::vector<int>& signs) const {
    const int line = cut.line;
    struct Item {
      Corner c;
      bool on_line;
      int orig_edge;
    };
    std::vector<Item> pos, neg;
    const std::size_t m = cell.corners.size();
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t k1 = (k + 1) % m;
      const int sk = signs[k], s1 = signs[k1];
      const Item it{cell.corners[k], sk == 0, static_cast<int>(k)};
      if (sk >= 0) pos.push_back(it);
      if (sk <= 0) neg.push_back(it);
      if (sk * s1 < 0) {
        const Item x{meet_corner(line, cell.edge_line[k]), true, static_cast<int>(k)};
        pos.push_back(x);
        neg.push_back(x);
      }
    }
    auto build = [&](const std::vector<Item>& items) {
      Cell c;
      c.corners.reserve(items.size());
      c.edge_line.reserve(items.size());
      for (std::size_t i = 0; i < items.size(); ++i) {
        const Item& a = items[i];
        const Item& b = items[(i + 1) % items.size()];
        c.corners.push_back(a.c);
        c.edge_line.push_back(a.on_line && b.on_line ? line : cell.edge_line[static_cast<std::size_t>(a.orig_edge)]);
      }
      return c;
    };
    return {build(pos), build(neg)};
  }

 private:
  const Polygon& poly_;
  const LineSet& lines_;
};

inline bool strictly_convex_ccw(const ConvexDecomposition& d, const ConvexComponent& c) {
  const std::size_t m = c.corners.size();
  if (m < 3) return false;
  for (std::size_t k = 0; k < m; ++k) {
    const XPoint a = d.point(c.corners[k]);
    const XPoint b = d.point(c.corners[(k + 1) % m]);
    const XPoint e = d.point(c.corners[(k + 2) % m]);
    if (orient_sign(a, b, e) <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Partition of the polygon into the convex cells of the chosen arrangement.
/// Components are numbered in lexicographic order of their representative
/// points.
inline ConvexDecomposition decompose(const Polygon& poly, const DecomposeOptions& opt = {}) {
  ConvexDecomposition out;
  out.source = poly;
  out.lines = LineSet(poly);
  const Triangulation tri = triangulate(poly);
  out.arrangement = opt.arrangement;
  const std::vector<Cut> cuts = arrangement_cuts(out.source, out.lines, opt.arrangement);
  const detail::Splitter splitter(out.source, out.lines);

  std::vector<detail::Cell> cells;
  std::vector<int> signs;
  std::vector<int> crossing;
  struct Pending {
    detail::Cell cell;
    std::vector<int> lines;
  };
  std::vector<Pending> stack;

  for (const auto& t : tri.triangles) {
    std::array<int, 3> v = t;
    if (orient_sign(poly[v[0]], poly[v[1]], poly[v[2]]) < 0) std::swap(v[1], v[2]);
    detail::Cell root;
    for (int k = 0; k < 3; ++k) {
      root.corners.push_back(splitter.vertex_corner(v[k]));
      root.edge_line.push_back(out.lines.through(v[k], v[(k + 1) % 3]));
    }
    crossing.clear();
    for (std::size_t l = 0; l < cuts.size(); ++l)
      if (splitter.classify(root, cuts[l], signs)) crossing.push_back(static_cast<int>(l));
    stack.push_back({std::move(root), crossing});

    while (!stack.empty()) {
      Pending cur = std::move(stack.back());
      stack.pop_back();
      if (cur.lines.empty()) {
        cells.push_back(std::move(cur.cell));
        if (cells.size() > opt.cell_cap)
          throw DecompositionOverflow("decompose: more than " + std::to_string(opt.cell_cap) + " cells");
        continue;
      }
      const Cut& cut = cuts[static_cast<std::size_t>(cur.lines.front())];
      splitter.classify(cur.cell, cut, signs);
      auto [pos, neg] = splitter.split(cur.cell, cut, signs);
      Pending p{std::move(pos), {}}, q{std::move(neg), {}};
      for (std::size_t i = 1; i < cur.lines.size(); ++i) {
        const Cut& c = cuts[static_cast<std::size_t>(cur.lines[i])];
        if (splitter.classify(p.cell, c, signs)) p.lines.push_back(cur.lines[i]);
        if (splitter.classify(q.cell, c, signs)) q.lines.push_back(cur.lines[i]);
      }
      stack.push_back(std::move(q));
      stack.push_back(std::move(p));
    }
  }

  out.components.reserve(cells.size());
  for (auto& c : cells) {
    ConvexComponent comp;
    std::vector<Point> pts;
    pts.reserve(c.corners.size());
    Point sum{};
    for (const auto& k : c.corners) {
      pts.push_back(k.approx);
      sum = sum + k.approx;
    }
    comp.representative = (1.0 / static_cast<double>(pts.size())) * sum;
    comp.boundary = Polygon(std::move(pts));
    comp.corners = std::move(c.corners);
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end(), [](const ConvexComponent& a, const ConvexComponent& b) {
    if (a.representative.x != b.representative.x) return a.representative.x < b.representative.x;
    return a.representative.y < b.representative.y;
  });
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i].id = static_cast<int>(i);

  if (opt.check) {
    double total = 0.0;
    for (const auto& c : out.components) {
      if (!detail::strictly_convex_ccw(out, c))
        throw RobustnessFailure("decompose: component " + std::to_string(c.id) + " is not convex");
      total += std::abs(signed_area(c.boundary.vertices()));
    }
    const double area = polygon_area(poly);
    if (std::abs(total - area) > 1e-6 * area)
      throw RobustnessFailure("decompose: component areas do not sum to the polygon area");
  }
  return out;
}

/// Component whose closure contains p (lowest id on ties), or nullopt when p
/// is outside the polygon.
inline std::optional<int> locate(const ConvexDecomposition& d, const XPoint& p) {
  if (point_in_polygon(p, d.source) == Containment::Exterior) return std::nullopt;
  for (const auto& c : d.components) {
    bool inside = true;
    const std::size_t m = c.corners.size();
    for (std::size_t k = 0; k < m && inside; ++k)
      inside = orient_sign(d.point(c.corners[k]), d.point(c.corners[(k + 1) % m]), p) >= 0;
    if (inside) return c.id;
  }
  return std::nullopt;
}

}  // namespace vguard
