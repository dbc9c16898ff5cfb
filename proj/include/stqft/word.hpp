#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "stqft/ints.hpp"

namespace stqft {

enum class Letter : unsigned { X = 0, Y = 1 };

// A word in the two non-commuting letters x, y.  Stored packed: bit i of
// `bits` is the i-th letter (0 = x, 1 = y), reading left to right.
class Word {
 public:
  Word() = default;
  Word(std::uint32_t bits, int size) : bits_(bits), size_(static_cast<std::uint8_t>(size)) {}

  static Word empty() { return Word(); }

  int size() const { return size_; }
  bool is_empty() const { return size_ == 0; }

  Letter at(int i) const { return static_cast<Letter>((bits_ >> i) & 1u); }

  int count_x() const;
  int count_y() const;
  // charge e = n_y - n_x
  int charge() const { return count_y() - count_x(); }

  // number of y's among the first `p` letters
  int prefix_y(int p) const;

  Word concat(const Word& other) const;

  // letters reversed (no x/y swap)
  Word reversed() const;

  // lexicographic with x < y; words of different length compare by content
  // then length (prefix first)
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const = default;

  // the empty word prints as "1"
  std::string str() const;
  static Word parse(const std::string& s);

  std::uint32_t raw_bits() const { return bits_; }

 private:
  std::uint32_t bits_ = 0;
  std::uint8_t size_ = 0;
};

// w0 <= w1 in the partial order: w1 reachable from w0 by moving x's right
// (equivalently y's left) through adjacent exchanges xy -> yx.  Computed by
// prefix counts; the brute-force closure lives in the tests as an oracle.
bool leq(const Word& w0, const Word& w1);

// all 2^n words of length n, in lexicographic order (x < y)
std::vector<Word> all_words(int n);

// words of length n with given x,y multidegree, lexicographic
std::vector<Word> words_of_multidegree(int nx, int ny);

// pairs (i, w') with w' = w after exchanging letters i, i+1 (only where the
// two letters differ); these are the covering moves of the partial order
std::vector<Word> exchange_neighbors_up(const Word& w);    // xy -> yx at some i
std::vector<Word> exchange_neighbors_down(const Word& w);  // yx -> xy at some i

}  // namespace stqft
