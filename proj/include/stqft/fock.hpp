#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stqft/word.hpp"

namespace stqft {

// Integer linear combination of words: an element of Z<x,y>.
// Invariant: no zero coefficients are stored.
class FockElement {
 public:
  FockElement() = default;
  FockElement(const Word& w) { terms_[w] = 1; }  // NOLINT: implicit by design
  static FockElement zero() { return FockElement(); }
  static FockElement unit() { return FockElement(Word::empty()); }

  bool is_zero() const { return terms_.empty(); }
  i64 coeff(const Word& w) const;
  const std::map<Word, i64>& terms() const { return terms_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  void add_term(const Word& w, i64 c);

  FockElement operator+(const FockElement& o) const;
  FockElement operator-(const FockElement& o) const;
  FockElement operator-() const;
  FockElement scaled(i64 c) const;
  bool operator==(const FockElement& o) const { return terms_ == o.terms_; }

  // bilinear extension of word concatenation
  FockElement operator*(const FockElement& o) const;

  // true if every word in the support has the given (n) resp. (n,e)
  bool homogeneous_length(int* n_out = nullptr) const;
  bool homogeneous_multidegree(int* nx_out = nullptr, int* ny_out = nullptr) const;

  i64 coeff_sum() const;
  bool coeffs_all_pm1() const;
  // gcd of all coefficients is 1 (false for 0)
  bool is_primitive() const;

  // e.g. "xyxy-xyyx-yxxy+yxyx", "1", "0", "2xy-yx"
  std::string str() const;
  static FockElement parse(const std::string& s);

 private:
  std::map<Word, i64> terms_;
};

// <u|v>: bilinear, <w0|w1> = 1 if w0 <= w1 else 0
i64 pairing(const FockElement& u, const FockElement& v);

// Gram matrix of <.|.> on the given word list, M[i][j] = [w_i <= w_j]
std::vector<std::vector<i64>> gram_matrix(const std::vector<Word>& basis);

// The duality operator H, defined by <u|v> = <v|Hu> for all v.  Exists and is
// integral because each multidegree Gram block is upper unitriangular in
// lexicographic order.
FockElement duality_H(const FockElement& u);

// (w-, w+) when the support has a unique minimum and maximum under <= and
// every support word lies between them; nullopt otherwise.  Throws on 0.
std::optional<std::pair<Word, Word>> support_interval(const FockElement& a);

// A Fock element up to global sign.  The stored representative is
// canonical: the coefficient of the lex-least support word is positive.
class LaxElement {
 public:
  LaxElement() = default;
  explicit LaxElement(const FockElement& e);
  const FockElement& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool operator==(const LaxElement& o) const { return rep_ == o.rep_; }
  bool operator!=(const LaxElement& o) const { return !(*this == o); }
  bool operator<(const LaxElement& o) const;
  std::string str() const;  // "±xy-yx" style with a leading ± marker

 private:
  FockElement rep_;
};

}  // namespace stqft
