#pragma once

#include <map>

#include "stqft/chord.hpp"
#include "stqft/fock.hpp"

namespace stqft {

// The distinguished family of basis chord diagrams: B_w has |w|+1 chords and
// suture element +-w.  Built by juxtaposing letter diagrams; the family
// realizes the partial order through the stacking pairing,
// P(B_u, B_v) = [u <= v], with euler(B_w) = charge(w).
class BasisFamily {
 public:
  // diagrams for all words of length n, keyed by word
  static const std::map<Word, ChordDiagram>& of_length(int n);

  static const ChordDiagram& diagram(const Word& w);
  static ChordDiagram vacuum();
  static ChordDiagram letter_x();  // the 2-chord diagram with e = -1
  static ChordDiagram letter_y();
};

// Side-by-side product gluing: joins d1's boundary to d2's along an arc with
// one marked point of each, realizing word concatenation on suture elements.
// On basis diagrams, juxtapose(B_u, B_v) = B_{uv}.
ChordDiagram juxtapose(const ChordDiagram& d1, const ChordDiagram& d2);

}  // namespace stqft
