// Guards a three-tooth comb with each solver and checks the result.
#include "vguard/guards.hpp"

#include <cstdio>

int main() {
  using namespace vguard;
  std::vector<Point> ring{{0, 0}, {12, 0}, {12, 1}};
  for (int i = 2; i >= 0; --i) {
    const double x = 2.0 + 4.0 * i;
    ring.push_back({x + 0.5, 1});
    ring.push_back({x, 5});
    ring.push_back({x - 0.5, 1});
  }
  ring.push_back({0, 1});
  const Polygon comb(ring);

  for (const GuardSolution& s : {solve_ghosh(comb), solve_hybrid(comb), solve_optimal(comb, Coverage::Components)}) {
    const CoverageReport rep = verify_coverage(comb, s, Coverage::Components);
    std::printf("%-8s %zu guards:", to_string(s.algorithm), s.size());
    for (int g : s.guards) std::printf(" %d", g);
    std::printf("  %s\n", rep.pass ? "covered" : rep.reason.c_str());
  }
}
