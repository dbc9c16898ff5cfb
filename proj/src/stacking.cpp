#include "stqft/stacking.hpp"

#include <stdexcept>

namespace stqft {

int stacking_pairing(const ChordDiagram& d1, const ChordDiagram& d2) {
  if (d1.points != d2.points) throw std::invalid_argument("stacking: size mismatch");
  if (d1.loops != 0 || d2.loops != 0) return 0;
  int n = d1.points;
  // nodes: 0..n-1 lower, n..2n-1 upper; every node has one chord edge and
  // one connector edge, so the union is a disjoint set of cycles
  std::vector<char> seen(2 * n, 0);
  int components = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++components;
    int cur = start;
    bool via_chord = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (via_chord)
        cur = (cur < n) ? d1.match[cur] : n + d2.match[cur - n];
      else
        cur = (cur < n) ? n + (cur + 1) % n : (cur - n - 1 + n) % n;
      via_chord = !via_chord;
    }
  }
  return components == 1 ? 1 : 0;
}

}  // namespace stqft
