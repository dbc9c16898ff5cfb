#pragma once

#include "stqft/chord.hpp"

namespace stqft {

// Geometric stacking number of two diagrams on (D^2, F_n): glue a second
// copy of the disc on top, rounding edges so that lower point j joins upper
// point j+1 (mod 2n).  The union of the two curve systems closes up on the
// sphere; the stacked structure is tight iff that dividing set is a single
// closed curve.  Returns 1 in that case, else 0.
//
// This equals |<c(d1) | c(d2)>| and in particular realizes the partial
// order on basis diagrams: P(B_u, B_v) = [u <= v].
int stacking_pairing(const ChordDiagram& d1, const ChordDiagram& d2);

}  // namespace stqft
