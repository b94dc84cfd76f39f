#pragma once
// Polygon files, solution JSON, experiment CSV rows and SVG scenes.

#include "vguard/guards.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vguard {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Polygon file:
//   POLY v1
//   EDGE u v      (optional)
//   SEED s        (optional)
//   N count
//   x y           (count lines)

struct PolygonFile {
  Polygon polygon;
  std::optional<std::pair<int, int>> edge;
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Clockwise rings are reversed around vertex 0, so index k becomes (n - k) % n.
inline PolygonFile to_ccw(PolygonFile f) {
  if (f.polygon.is_ccw()) return f;
  const std::size_t n = f.polygon.size();
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = f.polygon[(n - i) % n];
  f.polygon = Polygon(std::move(pts));
  if (f.edge) {
    auto remap = [n](int k) { return static_cast<int>((n - static_cast<std::size_t>(k)) % n); };
    f.edge = std::pair{remap(f.edge->first), remap(f.edge->second)};
  }
  return f;
}

}  // namespace detail

inline PolygonFile parse_polygon(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  auto bad = [&](const std::string& why) { return ParseError("line " + std::to_string(lineno) + ": " + why); };

  if (!next_line() || line != "POLY v1") throw bad("expected header 'POLY v1'");
  PolygonFile f;
  long long count = -1;
  while (count < 0) {
    if (!next_line()) throw bad("missing 'N <count>' line");
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "EDGE") {
      int u, v;
      if (!(ss >> u >> v)) throw bad("malformed EDGE line");
      f.edge = std::pair{u, v};
    } else if (tag == "SEED") {
      std::uint64_t s;
      if (!(ss >> s)) throw bad("malformed SEED line");
      f.seed = s;
    } else if (tag == "N") {
      if (!(ss >> count) || count < 3) throw bad("vertex count must be at least 3");
    } else {
      throw bad("unknown line '" + tag + "'");
    }
    std::string extra;
    if (ss >> extra) throw bad("trailing text");
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    if (!next_line()) throw bad("expected " + std::to_string(count) + " vertices, got " + std::to_string(i));
    std::istringstream ss(line);
    Point p;
    std::string extra;
    if (!(ss >> p.x >> p.y) || (ss >> extra)) throw bad("malformed vertex line");
    pts.push_back(p);
  }
  if (next_line()) throw bad("unexpected text after the vertex list");
  f.polygon = Polygon(std::move(pts));
  if (f.edge) {
    const auto n = static_cast<int>(f.polygon.size());
    if (f.edge->first < 0 || f.edge->first >= n || f.edge->second < 0 || f.edge->second >= n)
      throw ParseError("EDGE index out of range");
  }
  return detail::to_ccw(std::move(f));
}

inline PolygonFile parse_polygon(const std::string& text) {
  std::istringstream in(text);
  return parse_polygon(in);
}

inline PolygonFile read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_polygon(in);
}

inline std::string emit_polygon(const PolygonFile& file) {
  const PolygonFile f = detail::to_ccw(file);
  std::ostringstream out;
  out << "POLY v1\n";
  if (f.edge) out << "EDGE " << f.edge->first << ' ' << f.edge->second << '\n';
  if (f.seed) out << "SEED " << *f.seed << '\n';
  out << "N " << f.polygon.size() << '\n';
  for (const Point& p : f.polygon.vertices()) out << detail::fmt17(p.x) << ' ' << detail::fmt17(p.y) << '\n';
  return out.str();
}

inline PolygonFile polygon_file(const WeakVisInstance& inst, std::optional<std::uint64_t> seed = {}) {
  return PolygonFile{inst.polygon, std::pair{inst.u, inst.v}, seed};
}

// ---------------------------------------------------------------------------
// Solutions as JSON.

inline nlohmann::json to_json(const GuardSolution& s) {
  nlohmann::json j;
  j["algorithm"] = to_string(s.algorithm);
  j["count"] = s.guards.size();
  j["guards"] = s.guards;
  auto pts = nlohmann::json::array();
  for (const Point& p : s.guard_points) pts.push_back({p.x, p.y});
  j["guard_points"] = pts;
  j["covered_components"] = s.covered_components;
  j["covered_vertices"] = s.covered_vertices;
  j["elapsed"] = s.elapsed;
  j["iterations"] = s.iterations;
  if (s.arrangement) j["arrangement"] = to_string(*s.arrangement);
  j["meta"] = s.meta;
  j["trace"] = s.trace;
  return j;
}

inline GuardSolution solution_from_json(const nlohmann::json& j) {
  GuardSolution s;
  const std::string a = j.at("algorithm").get<std::string>();
  if (a == "ghosh") s.algorithm = Algorithm::Ghosh;
  else if (a == "weakvis6") s.algorithm = Algorithm::WeakVis6;
  else if (a == "hybrid") s.algorithm = Algorithm::Hybrid;
  else if (a == "optimal") s.algorithm = Algorithm::Optimal;
  else throw ParseError("unknown algorithm '" + a + "'");
  s.guards = j.at("guards").get<std::vector<int>>();
  if (j.contains("guard_points"))
    for (const auto& p : j["guard_points"]) s.guard_points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  if (j.contains("covered_components")) s.covered_components = j["covered_components"].get<std::vector<int>>();
  if (j.contains("covered_vertices")) s.covered_vertices = j["covered_vertices"].get<std::vector<int>>();
  s.elapsed = j.value("elapsed", 0.0);
  s.iterations = j.value("iterations", std::size_t{0});
  if (j.contains("arrangement"))
    s.arrangement = j["arrangement"] == "windows" ? Arrangement::Windows : Arrangement::VertexPairLines;
  if (j.contains("meta")) s.meta = j["meta"].get<std::map<std::string, std::string>>();
  if (j.contains("trace")) s.trace = j["trace"].get<std::vector<std::string>>();
  return s;
}

// ---------------------------------------------------------------------------
// Experiment rows.

inline constexpr const char* kCsvHeader = "instance,n,r,algo,guards,opt,ratio,seconds,seed";

struct ExperimentRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t r = 0;
  std::string algo;
  std::optional<std::size_t> guards;  // empty when the solver failed
  std::string error;                  // failure kind when guards is empty
  std::optional<std::size_t> opt;
  double seconds = 0.0;
  std::uint64_t seed = 0;

  std::optional<double> ratio() const {
    if (!guards || !opt || *opt == 0) return std::nullopt;
    return static_cast<double>(*guards) / static_cast<double>(*opt);
  }
};

inline std::string csv_row(const ExperimentRecord& r) {
  std::ostringstream out;
  out << r.instance << ',' << r.n << ',' << r.r << ',' << r.algo << ',';
  if (r.guards) out << *r.guards;
  else out << "error:" << r.error;
  out << ',';
  if (r.opt) out << *r.opt;
  out << ',';
  if (auto q = r.ratio()) out << std::setprecision(6) << *q;
  out << ',' << std::setprecision(6) << r.seconds << ',' << r.seed;
  return out.str();
}

// ---------------------------------------------------------------------------
// SVG scene: outline, vertex dots, tinted reflex vertices, guard markers.

struct SvgOptions {
  double width = 800.0;
  bool label_guards = true;
};

inline std::string render_svg(const Polygon& poly, const std::vector<int>& guards = {}, const SvgOptions& opt = {}) {
  double x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
  for (const Point& p : poly.vertices()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vw = w + 2 * mx, vh = h + 2 * my;
  const double unit = std::max(vw, vh) / 200.0;
  // Flip y so the scene reads with y pointing up.
  auto X = [&](double x) { return detail::fmt17(x); };
  auto Y = [&](double y) { return detail::fmt17(-y); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
    << detail::fmt17(opt.width * vh / vw) << "\" viewBox=\"" << X(x0 - mx) << ' ' << Y(y1 + my) << ' '
    << detail::fmt17(vw) << ' ' << detail::fmt17(vh) << "\">\n";
  s << "<path class=\"polygon\" fill=\"#eef3fb\" stroke=\"#1f3b73\" stroke-width=\"" << detail::fmt17(unit * 0.4)
    << "\" d=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) s << (i ? " L " : "M ") << X(poly[i].x) << ' ' << Y(poly[i].y);
  s << " Z\"/>\n";
  const std::vector<int> reflex = reflex_vertices(poly);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const bool rv = std::binary_search(reflex.begin(), reflex.end(), static_cast<int>(i));
    s << "<circle class=\"" << (rv ? "vertex reflex" : "vertex") << "\" cx=\"" << X(poly[i].x) << "\" cy=\""
      << Y(poly[i].y) << "\" r=\"" << detail::fmt17(unit * 0.8) << "\" fill=\"" << (rv ? "#d9480f" : "#1f3b73")
      << "\"/>\n";
  }
  for (int g : guards) {
    const Point p = poly[static_cast<std::size_t>(g)];
    s << "<circle class=\"guard\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << detail::fmt17(unit * 2.0)
      << "\" fill=\"none\" stroke=\"#2b8a3e\" stroke-width=\"" << detail::fmt17(unit * 0.6) << "\"/>\n";
    if (opt.label_guards) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "(%.2f, %.2f)", p.x, p.y);
      s << "<text class=\"guard-label\" x=\"" << X(p.x + 2.5 * unit) << "\" y=\"" << Y(p.y + 2.5 * unit)
        << "\" font-size=\"" << detail::fmt17(unit * 4) << "\" fill=\"#2b8a3e\">" << buf << "</text>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace vguard
