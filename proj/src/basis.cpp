#include "stqft/basis.hpp"

#include <mutex>
#include <stdexcept>

namespace stqft {

ChordDiagram juxtapose(const ChordDiagram& d1, const ChordDiagram& d2) {
  int n1 = d1.points, n2 = d2.points;
  // Glue the boundary arc around d1's point 2k1-3 to the one around d2's
  // point 2k2-4; the composite keeps d1's point 2k1-4 as basepoint.  This is
  // the unique point-gluing convention compatible with the basis family
  // fixed by the annulus calibrations (see tests for the pinning).
  int a = ((2 * d1.chords() - 3) % n1 + n1) % n1;
  int b = ((2 * d2.chords() - 4) % n2 + n2) % n2;
  int zero_at = n1 + n2 - 2 - 3;
  return glue_diagrams(d1, a, d2, b, zero_at);
}

namespace {

std::map<Word, ChordDiagram> build_family(int n) {
  std::map<Word, ChordDiagram> fam;
  for (const Word& w : all_words(n)) {
    ChordDiagram d = BasisFamily::vacuum();
    for (int i = 0; i < w.size(); ++i)
      d = juxtapose(d, w.at(i) == Letter::X ? BasisFamily::letter_x() : BasisFamily::letter_y());
    fam.emplace(w, std::move(d));
  }
  return fam;
}

std::mutex g_mutex;
std::map<int, std::map<Word, ChordDiagram>> g_cache;

}  // namespace

const std::map<Word, ChordDiagram>& BasisFamily::of_length(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_cache.find(n);
  if (it == g_cache.end()) it = g_cache.emplace(n, build_family(n)).first;
  return it->second;
}

const ChordDiagram& BasisFamily::diagram(const Word& w) {
  const auto& fam = of_length(w.size());
  return fam.at(w);
}

ChordDiagram BasisFamily::vacuum() { return ChordDiagram::parse("k=1; 0-1"); }
ChordDiagram BasisFamily::letter_x() { return ChordDiagram::parse("k=2; 0-3 1-2"); }
ChordDiagram BasisFamily::letter_y() { return ChordDiagram::parse("k=2; 0-1 2-3"); }

}  // namespace stqft
