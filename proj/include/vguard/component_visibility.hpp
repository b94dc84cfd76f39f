#pragma once
// Total visibility of convex components from polygon vertices (the F sets).

#include "vguard/convex_decomp.hpp"
#include "vguard/visibility.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace vguard {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Component ids totally visible from each vertex.
struct ComponentVisibility {
  std::vector<Bitset> sets;  // sets[j] over component ids

  std::size_t vertex_count() const { return sets.size(); }
  std::size_t component_count() const { return sets.empty() ? 0 : sets.front().size(); }
  bool contains(std::size_t j, std::size_t c) const { return sets[j].test(c); }
};

/// A component is totally visible from v_j iff all of its corners are. Cells
/// of the arrangement are never cut by a visibility boundary, so the corner
/// test is exact.
inline bool component_totally_visible(const Polygon& poly, const ConvexDecomposition& d, int vertex_index,
                                      const ConvexComponent& component) {
  for (const auto& c : component.corners) {
    if (c.vertex == vertex_index) continue;
    const XPoint p = d.point(c);
    if (!vertex_sees(poly, vertex_index, p, locate_point(poly, p))) return false;
  }
  return true;
}

/// Per-corner visibility cache shared by all components: corners are
/// deduplicated by their symbolic key and located once.
class CornerTable {
 public:
  explicit CornerTable(const ConvexDecomposition& d) : d_(d) {
    for (const auto& comp : d.components) {
      std::vector<int> ids;
      ids.reserve(comp.corners.size());
      for (const auto& c : comp.corners) {
        auto [it, fresh] = index_.try_emplace(c.key(), static_cast<int>(points_.size()));
        if (fresh) {
          points_.push_back(d.point(c));
          locations_.push_back(locate_point(d.source, points_.back()));
          vertex_.push_back(c.vertex);
        }
        ids.push_back(it->second);
      }
      corner_ids_.push_back(std::move(ids));
    }
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<int>& corners_of(std::size_t component) const { return corner_ids_[component]; }
  const XPoint& point(int id) const { return points_[static_cast<std::size_t>(id)]; }
  const Location& location(int id) const { return locations_[static_cast<std::size_t>(id)]; }
  int vertex(int id) const { return vertex_[static_cast<std::size_t>(id)]; }

 private:
  const ConvexDecomposition& d_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<XPoint> points_;
  std::vector<Location> locations_;
  std::vector<int> vertex_;
  std::vector<std::vector<int>> corner_ids_;
};

/// A point strictly inside the component, or nullopt for cells too thin for
/// the corner average to land inside.
inline std::optional<Point> strict_interior_point(const ConvexDecomposition& d, const ConvexComponent& c) {
  const std::size_t k = c.corners.size();
  std::vector<XPoint> pts;
  pts.reserve(k);
  for (const auto& corner : c.corners) pts.push_back(d.point(corner));
  auto inside = [&](Point p) {
    const XPoint xp(p);
    for (std::size_t i = 0; i < k; ++i)
      if (orient_sign(pts[i], pts[(i + 1) % k], xp) <= 0) return false;
    return true;
  };
  if (inside(c.representative)) return c.representative;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const Point t = (1.0 / 3.0) * (c.corners[0].approx + c.corners[i].approx + c.corners[i + 1].approx);
    if (inside(t)) return t;
  }
  return std::nullopt;
}

enum class TotalVisibilityTest {
  InteriorPoint,  // one exactly verified interior point per cell
  Corners,        // every corner of every cell
};

inline void require_every_component_seen(const ComponentVisibility& cv, std::size_t m) {
  Bitset any(m);
  for (const auto& s : cv.sets) any |= s;
  if (!any.all()) {
    std::size_t c = 0;
    while (any.test(c)) ++c;
    throw RobustnessFailure("component " + std::to_string(c) + " is not totally visible from any vertex");
  }
}

inline ComponentVisibility corner_component_visibility(const Polygon& poly, const ConvexDecomposition& d) {
  const std::size_t n = poly.size();
  const std::size_t m = d.m();
  const CornerTable table(d);
  ComponentVisibility out;
  out.sets.assign(n, Bitset(m));

  std::vector<std::int8_t> seen(table.size());
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), static_cast<std::int8_t>(-1));
    const int vj = static_cast<int>(j);
    auto visible = [&](int id) {
      auto& s = seen[static_cast<std::size_t>(id)];
      if (s < 0) s = table.vertex(id) == vj || vertex_sees(poly, vj, table.point(id), table.location(id));
      return s == 1;
    };
    for (std::size_t c = 0; c < m; ++c) {
      bool all = true;
      for (int id : table.corners_of(c)) {
        if (!visible(id)) {
          all = false;
          break;
        }
      }
      if (all) out.sets[j].set(c);
    }
  }
  require_every_component_seen(out, m);
  return out;
}

/// Cells are never crossed by a visibility window, so one interior point per
/// cell decides total visibility; cells too thin for a double interior point
/// fall back to testing every corner.
inline ComponentVisibility build_component_visibility(const Polygon& poly, const ConvexDecomposition& d,
                                                      TotalVisibilityTest test = TotalVisibilityTest::InteriorPoint) {
  if (test == TotalVisibilityTest::Corners) return corner_component_visibility(poly, d);
  const std::size_t n = poly.size();
  const std::size_t m = d.m();
  ComponentVisibility out;
  out.sets.assign(n, Bitset(m));

  const Location inside{Containment::Interior, -1, -1};
  std::vector<std::size_t> thin;
  for (std::size_t c = 0; c < m; ++c) {
    const auto p = strict_interior_point(d, d.components[c]);
    if (!p) {
      thin.push_back(c);
      continue;
    }
    const XPoint xp(*p);
    for (std::size_t j = 0; j < n; ++j)
      if (vertex_sees(poly, static_cast<int>(j), xp, inside)) out.sets[j].set(c);
  }
  if (!thin.empty()) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c : thin)
        if (component_totally_visible(poly, d, static_cast<int>(j), d.components[c])) out.sets[j].set(c);
  }

  require_every_component_seen(out, m);
  return out;
}

}  // namespace vguard
