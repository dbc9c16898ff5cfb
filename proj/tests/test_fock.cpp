#include "doctest.h"
#include "stqft/fock.hpp"

using namespace stqft;

namespace {
FockElement fe(const std::string& s) { return FockElement::parse(s); }
}  // namespace

TEST_CASE("element text round trip") {
  CHECK(fe("xyxy-xyyx-yxxy+yxyx").str() == "xyxy-xyyx-yxxy+yxyx");
  CHECK(fe("0").is_zero());
  CHECK(fe("1").str() == "1");
  CHECK(fe("2xy-yx").coeff(Word::parse("xy")) == 2);
  CHECK((fe("xy") - fe("xy")).is_zero());
}

TEST_CASE("multiply: menagerie identity and unit") {
  FockElement a = fe("xy-yx");
  CHECK((a * a).str() == "xyxy-xyyx-yxxy+yxyx");
  CHECK((fe("1") * fe("xyx")) == fe("xyx"));
  CHECK((fe("x") * fe("y")) == fe("xy"));
  // associativity and degree additivity on small cases
  FockElement b = fe("x+y"), c = fe("xx-yy");
  CHECK(((a * b) * c) == (a * (b * c)));
}

TEST_CASE("pairing spec examples") {
  CHECK(pairing(fe("xy"), fe("yx")) == 1);
  CHECK(pairing(fe("yx"), fe("xy")) == 0);
  CHECK(pairing(fe("xy-yx"), fe("xy-yx")) == 1);
  // Gram on F_2 basis (xx,xy,yx,yy): identity plus one extra 1 at (xy,yx)
  auto words = all_words(2);
  auto m = gram_matrix(words);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      i64 expect = (i == j) ? 1 : 0;
      if (words[i] == Word::parse("xy") && words[j] == Word::parse("yx")) expect = 1;
      CHECK(m[i][j] == expect);
    }
}

TEST_CASE("gram matrix unimodular for n <= 6") {
  // upper unitriangular in lex order: ones on the diagonal, zeros below
  for (int n = 1; n <= 6; ++n) {
    auto words = all_words(n);
    auto m = gram_matrix(words);
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(m[i][i] == 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(m[i][j] == 0);
    }
  }
}

TEST_CASE("duality H examples and defining identity") {
  CHECK(duality_H(fe("x")) == fe("x"));
  CHECK(duality_H(fe("y")) == fe("y"));
  CHECK(duality_H(fe("xy")) == fe("yx"));
  CHECK(duality_H(fe("yx")) == fe("yx-xy"));
  CHECK(duality_H(fe("0")).is_zero());
  for (int n = 1; n <= 5; ++n) {
    auto words = all_words(n);
    for (const Word& u : words) {
      FockElement hu = duality_H(FockElement(u));
      for (const Word& v : words)
        CHECK(pairing(FockElement(u), FockElement(v)) == pairing(FockElement(v), hu));
    }
  }
}

TEST_CASE("support interval") {
  auto si = support_interval(fe("xy-yx"));
  REQUIRE(si.has_value());
  CHECK(si->first == Word::parse("xy"));
  CHECK(si->second == Word::parse("yx"));
  auto single = support_interval(fe("xyx"));
  REQUIRE(single.has_value());
  CHECK(single->first == single->second);
  CHECK_FALSE(support_interval(fe("xx+yy")).has_value());
  CHECK_THROWS(support_interval(fe("0")));
}

TEST_CASE("lax elements") {
  LaxElement a(fe("xy-yx"));
  LaxElement b(fe("yx-xy"));
  CHECK(a == b);
  CHECK(a.rep().coeff(Word::parse("xy")) == 1);
  CHECK(LaxElement(fe("0")).is_zero());
  CHECK(a.str() == "±(xy-yx)");
  CHECK(LaxElement(fe("1")).str() == "±1");
}

TEST_CASE("word count is 2^n (disc rank)") {
  for (int n = 0; n <= 7; ++n) CHECK(all_words(n).size() == (std::size_t{1} << n));
}
