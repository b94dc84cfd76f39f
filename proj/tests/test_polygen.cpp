#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "vguard/io.hpp"
#include "vguard/polygen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vguard;

namespace {

GenConfig weak(std::uint64_t seed, int n) {
  GenConfig c;
  c.seed = seed;
  c.n = n;
  return c;
}

GenConfig simple_cfg(std::uint64_t seed, int n, int r) {
  GenConfig c;
  c.seed = seed;
  c.n = n;
  c.r_target = r;
  return c;
}

std::set<std::pair<double, double>> point_set(const std::vector<Point>& pts) {
  std::set<std::pair<double, double>> s;
  for (const Point& q : pts) s.insert({q.x, q.y});
  return s;
}

}  // namespace

TEST(GenWeakVis, VertexCounts) {
  const WeakVisInstance three = gen_weakvis(weak(42, 3));
  EXPECT_EQ(three.size(), 7u);
  const WeakVisInstance one = gen_weakvis(weak(1, 1));
  EXPECT_EQ(one.size(), 3u);
  for (int n : {2, 5, 10, 50}) EXPECT_EQ(gen_weakvis(weak(7, n)).size(), static_cast<std::size_t>(2 * n + 1));
  GenConfig fewer = weak(3, 6);
  fewer.dents = 2;
  EXPECT_EQ(gen_weakvis(fewer).size(), 10u);
}

TEST(GenWeakVis, RingLayoutAndEdge) {
  const WeakVisInstance w = gen_weakvis(weak(42, 3));
  const Polygon& p = w.polygon;
  // q = (-k, 0) first and p = (k, 0) last; the instance edge joins them.
  EXPECT_EQ(p[0].x, -100.0);
  EXPECT_EQ(p[0].y, 0.0);
  EXPECT_EQ(p[6].x, 100.0);
  EXPECT_EQ(p[6].y, 0.0);
  EXPECT_EQ(std::set<int>({w.u, w.v}), std::set<int>({0, 6}));
  // Spokes y1..y3 sit at even positions and run left to right in angle order.
  EXPECT_TRUE(p.is_ccw());
}

TEST(GenWeakVis, OutputsAreSimpleAndWeaklyVisible) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const WeakVisInstance w = gen_weakvis(weak(seed, 2 + static_cast<int>(seed % 8)));
    ASSERT_TRUE(is_simple(w.polygon)) << seed;
    ASSERT_TRUE(w.validated);
    WeakVisCheckOptions o;
    o.mc_samples = 500;
    o.seed = seed;
    ASSERT_TRUE(validate_weakvis(w, o).pass) << seed;
  }
}

TEST(GenWeakVis, Deterministic) {
  for (std::uint64_t seed : {1ull, 99ull, 12345ull}) {
    const std::string a = emit_polygon(polygon_file(gen_weakvis(weak(seed, 9)), seed));
    const std::string b = emit_polygon(polygon_file(gen_weakvis(weak(seed, 9)), seed));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, emit_polygon(polygon_file(gen_weakvis(weak(seed + 1, 9)), seed)));
  }
}

TEST(GenSimple, Examples) {
  const Polygon convex = gen_simple(simple_cfg(5, 9, 0));
  EXPECT_EQ(convex.size(), 9u);
  EXPECT_TRUE(reflex_vertices(convex).empty());
  const Polygon p = gen_simple(simple_cfg(1, 10, 3));
  EXPECT_EQ(p.size(), 13u);
  EXPECT_EQ(reflex_vertices(p).size(), 3u);
  const Polygon q = gen_simple(simple_cfg(1, 20, 5));
  EXPECT_EQ(q.size(), 25u);
  EXPECT_EQ(reflex_vertices(q).size(), 5u);
}

TEST(GenSimple, ReflexCountAndSimplicityOverSeeds) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 6 + static_cast<int>(seed % 15);
    const int r = static_cast<int>(seed % 7);
    const Polygon p = gen_simple(simple_cfg(seed, n, r));
    ASSERT_EQ(p.size(), static_cast<std::size_t>(n + r)) << seed;
    ASSERT_EQ(reflex_vertices(p).size(), static_cast<std::size_t>(r)) << seed;
    ASSERT_TRUE(is_simple(p)) << seed;
    // The convex vertices are the hull of the whole ring.
    const auto hull = oracle::convex_hull(p.vertices());
    ASSERT_EQ(hull.size(), static_cast<std::size_t>(n)) << seed;
  }
}

TEST(GenSimple, Deterministic) {
  const auto cfg = simple_cfg(77, 15, 4);
  EXPECT_EQ(emit_polygon({gen_simple(cfg), {}, 77}), emit_polygon({gen_simple(cfg), {}, 77}));
  GenConfig fan = cfg;
  fan.triangulation = DentTriangulation::Fan;
  EXPECT_EQ(reflex_vertices(gen_simple(fan)).size(), 4u);
}

TEST(GenSimple, RejectsBadConfig) {
  EXPECT_THROW(gen_simple(simple_cfg(1, 0, 0)), std::invalid_argument);
  EXPECT_THROW(gen_simple(simple_cfg(1, 5, -1)), std::invalid_argument);
  EXPECT_THROW(gen_simple(simple_cfg(1, 4, 40)), std::invalid_argument);
}

TEST(GenConvex, HullOfItself) {
  EXPECT_EQ(gen_convex(3, 1).size(), 3u);
  for (int n : {3, 7, 25, 60}) {
    const Polygon p = gen_convex(n, static_cast<std::uint64_t>(n));
    ASSERT_EQ(p.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(reflex_vertices(p).empty());
    EXPECT_TRUE(p.is_ccw());
    const auto hull = oracle::convex_hull(p.vertices());
    EXPECT_EQ(point_set(hull), point_set(p.vertices()));
  }
}

TEST(ValidateWeakVis, Examples) {
  const Polygon hex = fixtures::regular(6);
  for (int e = 0; e < 6; ++e) EXPECT_TRUE(validate_weakvis(hex, e, (e + 1) % 6).pass);
  const WeakVisReport bad = validate_weakvis(fixtures::l_shape(), 1, 2);
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.witness.has_value());
  // The witness lies in the upper arm, away from the bad edge.
  EXPECT_LT(bad.witness->x, 1.0 + 1e-12);
  EXPECT_GT(bad.witness->y, 1.0 - 1e-12);
  EXPECT_TRUE(validate_weakvis(fixtures::l_shape(), 0, 1).pass);
}
