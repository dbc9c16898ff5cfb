#include "stqft/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace stqft {

i64 FockElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FockElement::add_term(const Word& w, i64 c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

FockElement FockElement::operator+(const FockElement& o) const {
  FockElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

FockElement FockElement::operator-(const FockElement& o) const {
  FockElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, checked_sub(0, c));
  return r;
}

FockElement FockElement::operator-() const { return scaled(-1); }

FockElement FockElement::scaled(i64 c) const {
  FockElement r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_[w] = checked_mul(k, c);
  return r;
}

FockElement FockElement::operator*(const FockElement& o) const {
  FockElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1.concat(w2), checked_mul(c1, c2));
  return r;
}

bool FockElement::homogeneous_length(int* n_out) const {
  if (terms_.empty()) return true;
  int n = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_)
    if (w.size() != n) return false;
  if (n_out) *n_out = n;
  return true;
}

bool FockElement::homogeneous_multidegree(int* nx_out, int* ny_out) const {
  if (terms_.empty()) return true;
  int nx = terms_.begin()->first.count_x();
  int ny = terms_.begin()->first.count_y();
  for (const auto& [w, c] : terms_)
    if (w.count_x() != nx || w.count_y() != ny) return false;
  if (nx_out) *nx_out = nx;
  if (ny_out) *ny_out = ny;
  return true;
}

i64 FockElement::coeff_sum() const {
  i64 s = 0;
  for (const auto& [w, c] : terms_) s = checked_add(s, c);
  return s;
}

bool FockElement::coeffs_all_pm1() const {
  for (const auto& [w, c] : terms_)
    if (c != 1 && c != -1) return false;
  return true;
}

bool FockElement::is_primitive() const {
  i64 g = 0;
  for (const auto& [w, c] : terms_) g = gcd_nonneg(g, c);
  return g == 1;
}

std::string FockElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (c > 0 && !s.empty()) s += '+';
    if (c == -1)
      s += '-';
    else if (c != 1)
      s += std::to_string(c);
    s += w.str();
  }
  return s;
}

FockElement FockElement::parse(const std::string& s) {
  FockElement r;
  if (s == "0") return r;
  std::size_t i = 0;
  while (i < s.size()) {
    i64 sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    i64 mag = 1;
    // a bare "1" is the empty word unless followed by letters
    if (j > i && (j < s.size() && (s[j] == 'x' || s[j] == 'y'))) {
      mag = std::stoll(s.substr(i, j - i));
      i = j;
    }
    std::size_t k = i;
    while (k < s.size() && (s[k] == 'x' || s[k] == 'y' || s[k] == '1')) ++k;
    if (k == i) throw std::invalid_argument("bad element text: " + s);
    r.add_term(Word::parse(s.substr(i, k - i)), checked_mul(sign, mag));
    i = k;
  }
  return r;
}

i64 pairing(const FockElement& u, const FockElement& v) {
  i64 s = 0;
  for (const auto& [w0, c0] : u.terms())
    for (const auto& [w1, c1] : v.terms())
      if (leq(w0, w1)) s = checked_add(s, checked_mul(c0, c1));
  return s;
}

std::vector<std::vector<i64>> gram_matrix(const std::vector<Word>& basis) {
  std::size_t n = basis.size();
  std::vector<std::vector<i64>> m(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = leq(basis[i], basis[j]) ? 1 : 0;
  return m;
}

namespace {

// Solve M A = M^T for A with M upper unitriangular; columns of A are the
// images of the basis words under H.
std::vector<std::vector<i64>> solve_unitriangular(const std::vector<std::vector<i64>>& m) {
  std::size_t n = m.size();
  std::vector<std::vector<i64>> a(n, std::vector<i64>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    // back substitution: row i of (M A)_{.,col} = m[col][i] transposed target
    for (std::size_t ii = n; ii-- > 0;) {
      i64 rhs = m[col][ii];  // (M^T)[ii][col]
      for (std::size_t k = ii + 1; k < n; ++k)
        rhs = checked_sub(rhs, checked_mul(m[ii][k], a[k][col]));
      a[ii][col] = rhs;  // m[ii][ii] == 1
    }
  }
  return a;
}

}  // namespace

FockElement duality_H(const FockElement& u) {
  FockElement out;
  // split into multidegree blocks and solve each
  std::map<std::pair<int, int>, FockElement> blocks;
  for (const auto& [w, c] : u.terms()) {
    FockElement& b = blocks[{w.count_x(), w.count_y()}];
    b.add_term(w, c);
  }
  for (const auto& [deg, elem] : blocks) {
    std::vector<Word> basis = words_of_multidegree(deg.first, deg.second);
    auto m = gram_matrix(basis);
    auto a = solve_unitriangular(m);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      i64 cj = elem.coeff(basis[j]);
      if (cj == 0) continue;
      for (std::size_t i = 0; i < basis.size(); ++i)
        out.add_term(basis[i], checked_mul(cj, a[i][j]));
    }
  }
  return out;
}

std::optional<std::pair<Word, Word>> support_interval(const FockElement& a) {
  if (a.is_zero()) throw std::invalid_argument("support_interval of zero element");
  std::vector<Word> supp;
  for (const auto& [w, c] : a.terms()) supp.push_back(w);
  const Word* lo = nullptr;
  const Word* hi = nullptr;
  for (const Word& w : supp) {
    bool is_min = true, is_max = true;
    for (const Word& v : supp) {
      if (!leq(w, v)) is_min = false;
      if (!leq(v, w)) is_max = false;
    }
    if (is_min) lo = &w;
    if (is_max) hi = &w;
  }
  if (!lo || !hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

LaxElement::LaxElement(const FockElement& e) {
  rep_ = e;
  if (!rep_.is_zero() && rep_.terms().begin()->second < 0) rep_ = -rep_;
}

bool LaxElement::operator<(const LaxElement& o) const {
  auto it = rep_.terms().begin(), jt = o.rep_.terms().begin();
  for (; it != rep_.terms().end() && jt != o.rep_.terms().end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != o.rep_.terms().end();
}

std::string LaxElement::str() const {
  if (rep_.is_zero()) return "0";
  return "±" + (rep_.num_terms() > 1 ? "(" + rep_.str() + ")" : rep_.str());
}

}  // namespace stqft
