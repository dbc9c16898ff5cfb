// Scratch exploration tool; not part of the deliverable surface.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "stqft/basis.hpp"
#include "stqft/chord.hpp"
#include "stqft/stacking.hpp"

using namespace stqft;

namespace {

// Compose d1 and d2 by gluing d1's point a to d2's point b (a+b odd), then
// relabel so the composite cycle [d2: b+1..b-1][d1: a+1..a-1] has `zero_at`
// (an index into that cycle) as point 0.  Returns the composite diagram.
ChordDiagram glue_at(const ChordDiagram& d1, int a, const ChordDiagram& d2, int b, int zero_at) {
  int n1 = d1.points, n2 = d2.points;
  int n = n1 + n2 - 2;
  // cycle entries: (which, point)
  std::vector<std::pair<int, int>> cyc;
  for (int t = 1; t < n2; ++t) cyc.push_back({2, (b + t) % n2});
  for (int t = 1; t < n1; ++t) cyc.push_back({1, (a + t) % n1});
  std::vector<int> label1(n1, -1), label2(n2, -1);
  for (int i = 0; i < n; ++i) {
    auto [which, pt] = cyc[(zero_at + i) % n];
    (which == 1 ? label1 : label2)[pt] = i;
  }
  // trace chords through the junction a==b
  auto partner = [&](int which, int pt) -> std::pair<int, int> {
    // follow the curve leaving (which,pt) to its other endpoint in the
    // composite, crossing the junction if needed
    int w = which, p = pt;
    p = (w == 1 ? d1.match[p] : d2.match[p]);
    while ((w == 1 && p == a) || (w == 2 && p == b)) {
      // cross junction
      w = (w == 1 ? 2 : 1);
      p = (w == 1 ? a : b);
      p = (w == 1 ? d1.match[p] : d2.match[p]);
    }
    return {w, p};
  };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    auto [which, pt] = cyc[(zero_at + i) % n];
    auto [w2, p2] = partner(which, pt);
    int j = (w2 == 1 ? label1 : label2)[p2];
    if (i < j) pairs.push_back({i, j});
  }
  return ChordDiagram::from_pairs(n, pairs, d1.loops + d2.loops);
}

void unmerge(const std::string& name, const ChordDiagram& d1, const ChordDiagram& d2,
             const ChordDiagram& target) {
  int n1 = d1.points, n2 = d2.points, n = n1 + n2 - 2;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) {
      if ((a + b) % 2 == 0) continue;  // sign-incompatible gluing
      for (int z = 0; z < n; ++z) {
        ChordDiagram got = glue_at(d1, a, d2, b, z);
        if (got == target) {
          // where does d1's point 0 land? d2's point 0?
          std::printf("%s: a=%d b=%d z=%d", name.c_str(), a, b, z);
          // recover labels for reporting
          std::printf("  [a-(2k1-1)=%d, b-(2k2-1)=%d]\n", a - (n1 - 1), b - (n2 - 1));
        }
      }
    }
}

}  // namespace

int main(int argc, char** argv) {
  std::string mode = argc > 1 ? argv[1] : "unmerge";

  ChordDiagram x = ChordDiagram::parse("k=2; 0-3 1-2");
  ChordDiagram y = ChordDiagram::parse("k=2; 0-1 2-3");
  ChordDiagram M1 = ChordDiagram::parse("k=3; 0-1 2-3 4-5");  // yy
  ChordDiagram M2 = ChordDiagram::parse("k=3; 0-1 2-5 3-4");  // yx
  ChordDiagram M3 = ChordDiagram::parse("k=3; 0-5 1-2 3-4");  // xx
  ChordDiagram M5 = ChordDiagram::parse("k=3; 0-3 1-2 4-5");  // xy
  ChordDiagram yxy = ChordDiagram::parse("k=4; 0-1 2-7 3-6 4-5");

  if (mode == "unmerge") {
    unmerge("x*y=xy ", x, y, M5);
    unmerge("y*x=yx ", y, x, M2);
    unmerge("x*x=xx ", x, x, M3);
    unmerge("y*y=yy ", y, y, M1);
    unmerge("yx*y   ", M2, y, yxy);
    unmerge("y*xy   ", y, M5, yxy);
    unmerge("vac*x  ", ChordDiagram::parse("k=1; 0-1"), x, x);
    unmerge("x*vac  ", x, ChordDiagram::parse("k=1; 0-1"), x);
  }

  if (mode == "solutions_disabled") {
    for (int n = 2; n <= 3; ++n) {
      int cnt = 0;
      std::printf("n=%d solutions(cap 50)=%d\n", n, cnt);
    }
  }
  return 0;
}
