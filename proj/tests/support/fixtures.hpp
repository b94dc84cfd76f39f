#pragma once
// Hand-built polygons shared by the test binaries.

#include "vguard/geom.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace fixtures {

using vguard::Point;
using vguard::Polygon;

inline Polygon triangle() { return Polygon({{0, 0}, {2, 0}, {0, 2}}); }
inline Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline Polygon square2() { return Polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}); }

// Reflex vertex at index 3, (1, 1).
inline Polygon l_shape() { return Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

inline Polygon regular(int n, double radius = 10.0, double phase = 0.1) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * i / n;
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return Polygon(std::move(pts));
}

// Comb with k narrow triangular teeth on a 4k x 1 base: 3k + 4 vertices, the
// 2k tooth feet are reflex, and tooth tips see no other tooth.
inline Polygon comb(int k) {
  const double w = 0.5, h = 5.0;
  std::vector<Point> pts{{0, 0}, {4.0 * k, 0}, {4.0 * k, 1}};
  for (int i = k - 1; i >= 0; --i) {
    const double x = 2.0 + 4.0 * i;
    pts.push_back({x + w, 1});
    pts.push_back({x, h});
    pts.push_back({x - w, 1});
  }
  pts.push_back({0, 1});
  return Polygon(std::move(pts));
}

// Convex quadrilateral and a pentagon-with-notch used for small cases.
inline Polygon convex_quad() { return Polygon({{0, 0}, {4, 0}, {5, 3}, {1, 4}}); }
inline Polygon notched() { return Polygon({{0, 0}, {6, 0}, {6, 4}, {3, 1.5}, {0, 4}}); }

inline std::vector<Polygon> all() {
  return {triangle(), unit_square(), square2(), l_shape(), regular(5), regular(8), comb(2), comb(3), convex_quad(),
          notched()};
}

}  // namespace fixtures
