#include "stqft/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stqft {

int Word::count_y() const {
  std::uint32_t mask = (size_ >= 32) ? ~0u : ((1u << size_) - 1u);
  return std::popcount(bits_ & mask);
}

int Word::count_x() const { return size() - count_y(); }

int Word::prefix_y(int p) const {
  std::uint32_t mask = (p >= 32) ? ~0u : ((1u << p) - 1u);
  return std::popcount(bits_ & mask);
}

Word Word::concat(const Word& other) const {
  if (size_ + other.size_ > 30) throw std::length_error("word too long");
  return Word(bits_ | (other.bits_ << size_), size_ + other.size_);
}

Word Word::reversed() const {
  std::uint32_t b = 0;
  for (int i = 0; i < size_; ++i)
    if ((bits_ >> i) & 1u) b |= 1u << (size_ - 1 - i);
  return Word(b, size_);
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  int n = size_ < other.size_ ? size_ : other.size_;
  for (int i = 0; i < n; ++i) {
    unsigned a = (bits_ >> i) & 1u, b = (other.bits_ >> i) & 1u;
    if (a != b) return a <=> b;
  }
  return size_ <=> other.size_;
}

std::string Word::str() const {
  if (size_ == 0) return "1";
  std::string s;
  s.reserve(size_);
  for (int i = 0; i < size_; ++i) s += (at(i) == Letter::X) ? 'x' : 'y';
  return s;
}

Word Word::parse(const std::string& s) {
  if (s == "1") return Word();
  std::uint32_t bits = 0;
  int n = 0;
  for (char c : s) {
    if (c == 'x')
      ;
    else if (c == 'y')
      bits |= 1u << n;
    else
      throw std::invalid_argument("bad word character: " + s);
    ++n;
    if (n > 30) throw std::length_error("word too long");
  }
  return Word(bits, n);
}

bool leq(const Word& w0, const Word& w1) {
  if (w0.size() != w1.size()) return false;
  if (w0.count_y() != w1.count_y()) return false;
  for (int p = 1; p < w0.size(); ++p)
    if (w1.prefix_y(p) < w0.prefix_y(p)) return false;
  return true;
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < (1u << n); ++b) out.emplace_back(b, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of_multidegree(int nx, int ny) {
  std::vector<Word> out;
  for (const Word& w : all_words(nx + ny))
    if (w.count_y() == ny) out.push_back(w);
  return out;
}

std::vector<Word> exchange_neighbors_up(const Word& w) {
  std::vector<Word> out;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w.at(i) == Letter::X && w.at(i + 1) == Letter::Y) {
      std::uint32_t b = w.raw_bits();
      b &= ~(1u << (i + 1));
      b |= 1u << i;
      out.emplace_back(b, w.size());
    }
  return out;
}

std::vector<Word> exchange_neighbors_down(const Word& w) {
  std::vector<Word> out;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w.at(i) == Letter::Y && w.at(i + 1) == Letter::X) {
      std::uint32_t b = w.raw_bits();
      b &= ~(1u << i);
      b |= 1u << (i + 1);
      out.emplace_back(b, w.size());
    }
  return out;
}

}  // namespace stqft
