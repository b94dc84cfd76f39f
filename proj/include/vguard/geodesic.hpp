#pragma once
// Ear-clipping triangulation and geodesic shortest-path trees.

#include "vguard/geom.hpp"
#include "vguard/visibility.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace vguard {

struct Triangulation {
  std::vector<std::array<int, 3>> triangles;  // same orientation as the polygon
  std::vector<std::array<int, 2>> diagonals;
};

/// Ear clipping; the lowest-index remaining ear is cut first. O(n^3).
inline Triangulation triangulate(const Polygon& poly) {
  validate(poly);
  const int s = poly.interior_sign();
  std::vector<int> ring(poly.size());
  for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = static_cast<int>(i);

  Triangulation out;
  auto is_ear = [&](std::size_t k) {
    const std::size_t m = ring.size();
    const int a = ring[(k + m - 1) % m], b = ring[k], c = ring[(k + 1) % m];
    if (orient_sign(poly[a], poly[b], poly[c]) * s <= 0) return false;
    for (std::size_t t = 0; t < m; ++t) {
      const int p = ring[t];
      if (p == a || p == b || p == c) continue;
      const Point q = poly[p];
      // Closed containment: a vertex touching the candidate diagonal blocks it.
      if (orient_sign(poly[a], poly[b], q) * s >= 0 && orient_sign(poly[b], poly[c], q) * s >= 0 &&
          orient_sign(poly[c], poly[a], q) * s >= 0)
        return false;
    }
    return true;
  };

  while (ring.size() > 3) {
    std::size_t chosen = ring.size();
    for (std::size_t k = 0; k < ring.size(); ++k) {
      if (is_ear(k)) {
        chosen = k;
        break;
      }
    }
    if (chosen == ring.size()) throw InvalidPolygon("triangulate: no ear found");
    const std::size_t m = ring.size();
    const int a = ring[(chosen + m - 1) % m], b = ring[chosen], c = ring[(chosen + 1) % m];
    out.triangles.push_back({a, b, c});
    out.diagonals.push_back({std::min(a, c), std::max(a, c)});
    ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(chosen));
  }
  out.triangles.push_back({ring[0], ring[1], ring[2]});
  return out;
}

struct ShortestPathTree {
  int root = 0;
  std::vector<int> parent;
  std::vector<double> distance;
};

/// Single-source shortest paths over the vertex visibility graph. In a simple
/// polygon geodesics only bend at reflex vertices, so this is the geodesic
/// tree. Equal-length alternatives prefer the lower parent index.
inline ShortestPathTree shortest_path_tree(const Polygon& poly, int root, const VisibilityMap& vis) {
  const std::size_t n = poly.size();
  if (root < 0 || static_cast<std::size_t>(root) >= n) throw std::out_of_range("shortest_path_tree: bad root");
  constexpr double inf = std::numeric_limits<double>::infinity();
  ShortestPathTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.distance.assign(n, inf);
  std::vector<char> done(n, 0);
  t.parent[root] = root;
  t.distance[root] = 0.0;

  for (std::size_t iter = 0; iter < n; ++iter) {
    int u = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && t.distance[i] < inf && (u < 0 || t.distance[i] < t.distance[u])) u = static_cast<int>(i);
    if (u < 0) break;
    done[u] = 1;
    for (std::size_t z = 0; z < n; ++z) {
      if (done[z] || !vis(u, z)) continue;
      const double cand = t.distance[u] + norm(poly[z] - poly[u]);
      const double tol = 1e-12 * std::max(1.0, cand);
      if (cand < t.distance[z] - tol ||
          (std::abs(cand - t.distance[z]) <= tol && u < t.parent[z])) {
        t.distance[z] = cand;
        t.parent[z] = u;
      }
    }
  }
  return t;
}

inline ShortestPathTree shortest_path_tree(const Polygon& poly, int root) {
  return shortest_path_tree(poly, root, vertex_visibility_matrix(poly));
}

inline int parent_on_tree(const ShortestPathTree& tree, int z) { return tree.parent.at(static_cast<std::size_t>(z)); }

/// Vertex sequence root -> z along the tree.
inline std::vector<int> tree_path(const ShortestPathTree& tree, int z) {
  std::vector<int> path{z};
  while (z != tree.root) {
    z = tree.parent.at(static_cast<std::size_t>(z));
    path.push_back(z);
  }
  return {path.rbegin(), path.rend()};
}

}  // namespace vguard
