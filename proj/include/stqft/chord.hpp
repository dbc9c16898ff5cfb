#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stqft/word.hpp"

namespace stqft {

// A set of sutures on a marked disc with no closed components recorded by
// position: a noncrossing perfect matching of 2k boundary points labelled
// clockwise from the basepoint, plus a count of closed contractible loops
// (loops carry no position data; suture elements depend only on isotopy
// class and vanish as soon as one loop is present).
struct ChordDiagram {
  int points = 0;              // 2k
  std::vector<int> match;      // match[p] = q, perfect matching
  int loops = 0;               // contractible closed components

  int chords() const { return points / 2; }
  bool loop_free() const { return loops == 0; }

  // chords as (a,b) with a < b, sorted by a
  std::vector<std::pair<int, int>> chord_pairs() const;

  bool operator==(const ChordDiagram& o) const = default;
  bool operator<(const ChordDiagram& o) const;

  // "k=4; 0-7 1-2 3-6 4-5; loops=0" (loops part omitted when 0)
  std::string str() const;
  static ChordDiagram parse(const std::string& s);

  static ChordDiagram from_pairs(int points, const std::vector<std::pair<int, int>>& pairs,
                                 int loops = 0);
};

// throws std::invalid_argument unless `match` is a noncrossing perfect matching
void validate_diagram(const ChordDiagram& d);

// all loop-free noncrossing perfect matchings on 2k points, sorted
std::vector<ChordDiagram> enumerate_diagrams(int k);

// relabel p -> (p + shift) mod 2k
ChordDiagram rotate_labels(const ChordDiagram& d, int shift);

// insert a new outermost chord occupying positions (pos, pos+1); old labels
// >= pos shift up by two
ChordDiagram insert_small_chord(const ChordDiagram& d, int pos);

// Glue d1's point a to d2's point b (a+b must be odd for the signs of the
// adjacent boundary arcs to match).  The composite boundary reads
// [d2: b+1..b-1][d1: a+1..a-1] clockwise; `zero_at` picks which entry of
// that cycle becomes point 0.  Chords meeting the junction concatenate.
ChordDiagram glue_diagrams(const ChordDiagram& d1, int a, const ChordDiagram& d2, int b,
                           int zero_at);

// Complementary regions of a loop-free diagram in the disc.  Segment j runs
// clockwise from point j to point j+1 (mod 2k).  Faces carry the walk order
// of their boundary: segments interleaved with chord sides, each side
// traversed from `side_from` to `side_to`.
struct DiscFaces {
  int num_faces = 0;
  std::vector<int> face_of_seg;            // segment -> face
  std::vector<int> depth;                  // face -> number of enclosing chords
  std::vector<std::vector<int>> segs;      // face -> segments in walk order
  std::vector<std::vector<int>> side_chord;  // chord index (by chord_pairs order)
  std::vector<std::vector<int>> side_from;   // endpoint where the side traversal starts
  std::vector<std::vector<int>> side_to;
  std::vector<int> chord_face[2];          // chord -> its two faces (0: side containing seg a, 1: other)
};

DiscFaces disc_faces(const ChordDiagram& d);

// sign of a face: the region adjacent to the segment from point 0 to point 1
// is positive; signs alternate across chords
inline int face_sign(const DiscFaces& f, int face) { return (f.depth[face] % 2 == 1) ? +1 : -1; }

// e = #positive regions - #negative regions; error on loops
int euler_class(const ChordDiagram& d);

}  // namespace stqft
