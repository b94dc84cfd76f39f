#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "vguard/component_visibility.hpp"
#include "vguard/polygen.hpp"
#include "vguard/sampling.hpp"
#include "vguard/visibility.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace vguard;

namespace {

std::size_t brute_edges(const Polygon& poly) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i + 1; j < poly.size(); ++j) e += oracle::segment_sees(poly, poly[i], poly[j]);
  return e;
}

std::vector<Polygon> generated() {
  std::vector<Polygon> out;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    GenConfig w;
    w.seed = s;
    w.n = 4;
    out.push_back(gen_weakvis(w).polygon);
    GenConfig g;
    g.seed = s;
    g.n = 8;
    g.r_target = 3;
    out.push_back(gen_simple(g));
  }
  return out;
}

}  // namespace

TEST(Sees, Examples) {
  const Polygon sq = fixtures::unit_square();
  EXPECT_TRUE(sees(sq, Point{0, 0}, Point{1, 1}));
  const Polygon l = fixtures::l_shape();
  EXPECT_FALSE(sees(l, Point{2, 1}, Point{0, 2}));
  EXPECT_TRUE(sees(l, Point{2, 0}, Point{0, 2}));
  // Along an edge and along a collinear run of two edges.
  EXPECT_TRUE(sees(l, Point{2, 1}, Point{1, 1}));
  EXPECT_TRUE(sees(Polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}), Point{0, 0}, Point{2, 0}));
  // Exterior chord between two boundary points.
  EXPECT_FALSE(sees(l, Point{1.5, 1}, Point{1, 1.5}));
}

TEST(Sees, SymmetricAndInvariantUnderRigidMotion) {
  auto polys = fixtures::all();
  for (const Polygon& g : generated()) polys.push_back(g);
  for (const Polygon& p : polys) {
    const double th = 0.7;
    std::vector<Point> moved;
    for (const Point& q : p.vertices()) moved.push_back({std::cos(th) * q.x - std::sin(th) * q.y + 3, std::sin(th) * q.x + std::cos(th) * q.y - 1});
    const Polygon m(moved);
    const auto sample = sample_interior(p, 10, 5);
    std::vector<Point> pts = p.vertices();
    pts.insert(pts.end(), sample.begin(), sample.end());
    auto mv = [&](Point q) { return Point{std::cos(th) * q.x - std::sin(th) * q.y + 3, std::sin(th) * q.x + std::cos(th) * q.y - 1}; };
    for (const Point& a : pts)
      for (const Point& b : pts) {
        const bool s = sees(p, a, b);
        ASSERT_EQ(s, sees(p, b, a));
        // Rotation perturbs coordinates, so grazing pairs are skipped: a pair
        // is compared only when a boundary tolerance does not change the answer.
        if (oracle::segment_sees(p, a, b, 1e-6) == oracle::segment_sees(p, a, b, -1.0))
          EXPECT_EQ(sees(m, mv(a), mv(b)), s);
      }
  }
}

TEST(VisibilityMatrix, ConvexIsComplete) {
  for (int n : {3, 6, 11}) {
    const VisibilityMap vis = vertex_visibility_matrix(fixtures::regular(n));
    EXPECT_EQ(vis.edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(VisibilityMatrix, MatchesSegmentOracle) {
  const Polygon l = fixtures::l_shape();
  EXPECT_EQ(vertex_visibility_matrix(l).edge_count(), brute_edges(l));
  const Polygon c = fixtures::comb(2);
  const std::size_t e = vertex_visibility_matrix(c).edge_count();
  EXPECT_EQ(e, brute_edges(c));
  EXPECT_LT(e, c.size() * (c.size() - 1) / 2);
  for (const Polygon& g : generated()) {
    const VisibilityMap vis = vertex_visibility_matrix(g);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        ASSERT_EQ(vis(i, j), vis(j, i));
        if (i != j) ASSERT_EQ(vis(i, j), oracle::segment_sees(g, g[i], g[j])) << i << ' ' << j;
      }
  }
}

TEST(ComponentVisibility, ConvexEverySetFull) {
  const Polygon p = fixtures::regular(6);
  const ConvexDecomposition d = decompose(p);
  const ComponentVisibility cv = build_component_visibility(p, d);
  for (std::size_t j = 0; j < p.size(); ++j) EXPECT_TRUE(cv.sets[j].all());
  for (const auto& c : d.components) EXPECT_TRUE(component_totally_visible(p, d, 0, c));
}

TEST(ComponentVisibility, LShapeExamples) {
  const Polygon l = fixtures::l_shape();
  const ConvexDecomposition d = decompose(l);
  const auto near_top = locate(d, Point{0.1, 1.9});
  ASSERT_TRUE(near_top.has_value());
  EXPECT_FALSE(component_totally_visible(l, d, 2, d.components[static_cast<std::size_t>(*near_top)]));
  const ComponentVisibility cv = build_component_visibility(l, d);
  EXPECT_TRUE(cv.sets[3].all());
  EXPECT_FALSE(cv.contains(2, static_cast<std::size_t>(*near_top)));
}

TEST(ComponentVisibility, BoundaryVertexSeesItsCell) {
  for (const Polygon& p : fixtures::all()) {
    const ConvexDecomposition d = decompose(p);
    for (const auto& c : d.components)
      for (const auto& k : c.corners)
        if (k.vertex >= 0) EXPECT_TRUE(component_totally_visible(p, d, k.vertex, c));
  }
}

TEST(ComponentVisibility, InteriorPointMatchesCornerTest) {
  auto polys = fixtures::all();
  for (const Polygon& g : generated()) polys.push_back(g);
  for (const Polygon& p : polys)
    for (Arrangement a : {Arrangement::VertexPairLines, Arrangement::Windows}) {
      DecomposeOptions o;
      o.arrangement = a;
      const ConvexDecomposition d = decompose(p, o);
      const ComponentVisibility fast = build_component_visibility(p, d, TotalVisibilityTest::InteriorPoint);
      const ComponentVisibility slow = build_component_visibility(p, d, TotalVisibilityTest::Corners);
      ASSERT_EQ(fast.sets, slow.sets);
    }
}

TEST(ComponentVisibility, SampledPointsInVisibleCellsAreSeen) {
  for (const Polygon& p : generated()) {
    const ConvexDecomposition d = decompose(p);
    const ComponentVisibility cv = build_component_visibility(p, d);
    // Every fifth cell keeps the run short while touching all regions.
    for (std::size_t c = 0; c < d.m(); c += 5) {
      // Random convex combinations of the corners stay inside the convex cell,
      // including cells too thin for rejection sampling.
      const auto& corners = d.components[c].boundary.vertices();
      Rng rng(31 + c);
      std::vector<Point> pts;
      for (int s = 0; s < 100; ++s) {
        double wsum = 0.0;
        Point q{};
        for (const Point& k : corners) {
          const double w = rng.uniform() + 1e-3;
          q = q + w * k;
          wsum += w;
        }
        pts.push_back((1.0 / wsum) * q);
      }
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (!cv.contains(j, c)) continue;
        for (const Point& q : pts) ASSERT_TRUE(sees(p, p[j], q)) << "cell " << c << " vertex " << j;
      }
    }
  }
}
