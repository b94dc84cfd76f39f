#pragma once
// Seeded random sources shared by the generators and Monte Carlo checks.

#include "vguard/geom.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace vguard {

/// mt19937_64 with a fixed 53-bit mantissa mapping, so draws are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return gen_(); }
  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

 private:
  std::mt19937_64 gen_;
};

/// Derive an independent stream for (seed, salt).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Rejection-sampled points strictly inside the polygon.
inline std::vector<Point> sample_interior(const Polygon& poly, std::size_t count, std::uint64_t seed) {
  double x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
  for (const auto& p : poly.vertices()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(count);
  std::size_t tries = 0;
  while (out.size() < count) {
    if (++tries > 1000 * count + 100000) throw std::runtime_error("sample_interior: polygon too thin to sample");
    const Point p{rng.uniform(x0, x1), rng.uniform(y0, y1)};
    if (point_in_polygon(p, poly) == Containment::Interior) out.push_back(p);
  }
  return out;
}

}  // namespace vguard
