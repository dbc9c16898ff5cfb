#include <map>
#include <vector>

#include "doctest.h"
#include "stqft/basis.hpp"
#include "stqft/stacking.hpp"

using namespace stqft;

namespace {

ChordDiagram cd(const std::string& s) { return ChordDiagram::parse(s); }
ChordDiagram B(const std::string& w) { return BasisFamily::diagram(Word::parse(w)); }

// Oracle: backtracking search for word->diagram assignments realizing the
// stacking Gram matrix with the right Euler classes, independent of the
// juxtaposition construction.  `pins` fixes known diagrams.
struct FamilySearch {
  std::vector<Word> words;
  std::vector<std::vector<i64>> gram;
  std::vector<ChordDiagram> pool;
  std::map<Word, ChordDiagram> pins;
  std::vector<int> chosen;
  std::vector<char> used;
  std::vector<std::map<Word, ChordDiagram>> solutions;
  int cap = 4;

  explicit FamilySearch(int n) : words(all_words(n)), gram(gram_matrix(words)),
                                 pool(enumerate_diagrams(n + 1)) {}

  void run() {
    chosen.assign(words.size(), -1);
    used.assign(pool.size(), 0);
    rec(0);
  }

  void rec(std::size_t wi) {
    if (static_cast<int>(solutions.size()) >= cap) return;
    if (wi == words.size()) {
      std::map<Word, ChordDiagram> sol;
      for (std::size_t j = 0; j < words.size(); ++j) sol.emplace(words[j], pool[chosen[j]]);
      solutions.push_back(std::move(sol));
      return;
    }
    auto pinned = pins.find(words[wi]);
    for (std::size_t pi = 0; pi < pool.size(); ++pi) {
      if (used[pi]) continue;
      const ChordDiagram& d = pool[pi];
      if (pinned != pins.end() && !(d == pinned->second)) continue;
      if (euler_class(d) != words[wi].charge()) continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j <= wi; ++j) {
        const ChordDiagram& dj = (j == wi) ? d : pool[chosen[j]];
        if (stacking_pairing(dj, d) != gram[j][wi]) ok = false;
        if (stacking_pairing(d, dj) != gram[wi][j]) ok = false;
      }
      if (!ok) continue;
      chosen[wi] = static_cast<int>(pi);
      used[pi] = 1;
      rec(wi + 1);
      used[pi] = 0;
      chosen[wi] = -1;
    }
  }
};

}  // namespace

TEST_CASE("letter diagrams and vacuum") {
  CHECK(euler_class(BasisFamily::letter_x()) == -1);
  CHECK(euler_class(BasisFamily::letter_y()) == +1);
  CHECK(BasisFamily::diagram(Word::empty()) == BasisFamily::vacuum());
}

TEST_CASE("juxtapose: unit law and letters") {
  ChordDiagram vac = BasisFamily::vacuum();
  ChordDiagram x = BasisFamily::letter_x(), y = BasisFamily::letter_y();
  CHECK(juxtapose(vac, x) == x);
  CHECK(juxtapose(x, vac) == x);
  CHECK(juxtapose(vac, y) == y);
  CHECK(juxtapose(y, vac) == y);
  CHECK(juxtapose(x, y) == cd("k=3; 0-3 1-2 4-5"));
  CHECK(juxtapose(y, x) == cd("k=3; 0-1 2-5 3-4"));
  CHECK(juxtapose(x, x) == cd("k=3; 0-5 1-2 3-4"));
  CHECK(juxtapose(y, y) == cd("k=3; 0-1 2-3 4-5"));
}

TEST_CASE("juxtapose is associative on basis diagrams") {
  for (const Word& u : all_words(2))
    for (const Word& v : all_words(2)) {
      ChordDiagram lhs = juxtapose(B(u.str()), B(v.str()));
      CHECK(lhs == B(u.concat(v).str()));
    }
  // mixed split sizes
  CHECK(juxtapose(B("x"), B("yxy")) == B("xyxy"));
  CHECK(juxtapose(B("xyx"), B("y")) == B("xyxy"));
  CHECK(juxtapose(B("xy"), B("xy")) == B("xyxy"));
}

TEST_CASE("euler additivity under juxtapose, <= 5 chords") {
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = 1; k2 <= 3; ++k2)
      for (const auto& d1 : enumerate_diagrams(k1))
        for (const auto& d2 : enumerate_diagrams(k2))
          CHECK(euler_class(juxtapose(d1, d2)) == euler_class(d1) + euler_class(d2));
}

TEST_CASE("basis diagrams realize the stacking Gram matrix, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto& fam = BasisFamily::of_length(n);
    auto words = all_words(n);
    for (const Word& u : words) {
      CHECK(euler_class(fam.at(u)) == u.charge());
      for (const Word& v : words)
        CHECK(stacking_pairing(fam.at(u), fam.at(v)) == (leq(u, v) ? 1 : 0));
    }
  }
}

TEST_CASE("basis diagrams are distinct (injective in w)") {
  for (int n = 1; n <= 6; ++n) {
    const auto& fam = BasisFamily::of_length(n);
    std::map<ChordDiagram, int> seen;
    for (const auto& [w, d] : fam) seen[d]++;
    for (const auto& [d, c] : seen) CHECK(c == 1);
  }
}

TEST_CASE("anchored family search reproduces the constructed family at n = 3") {
  // pins: the torsion-annulus preimage for yxy (unique two-seam-crossing cut
  // of two core loops plus two boundary-parallel arcs)
  FamilySearch fs(3);
  fs.pins.emplace(Word::parse("yxy"), cd("k=4; 0-1 2-7 3-6 4-5"));
  for (const Word& w : all_words(2)) fs.pins.emplace(w, B(w.str()));  // unused at n=3
  fs.pins.emplace(Word::parse("xyx"), B("xyx"));
  fs.run();
  REQUIRE(fs.solutions.size() >= 1);
  for (const auto& sol : fs.solutions)
    for (const auto& [w, d] : sol)
      if (w == Word::parse("yxy")) CHECK(d == B("yxy"));
  CHECK(B("yxy") == cd("k=4; 0-1 2-7 3-6 4-5"));
}
