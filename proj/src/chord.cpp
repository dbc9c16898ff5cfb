#include "stqft/chord.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stqft {

std::vector<std::pair<int, int>> ChordDiagram::chord_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < points; ++p)
    if (match[p] > p) out.emplace_back(p, match[p]);
  return out;
}

bool ChordDiagram::operator<(const ChordDiagram& o) const {
  if (points != o.points) return points < o.points;
  if (match != o.match) return match < o.match;
  return loops < o.loops;
}

std::string ChordDiagram::str() const {
  std::ostringstream os;
  os << "k=" << chords() << ";";
  for (auto [a, b] : chord_pairs()) os << ' ' << a << '-' << b;
  if (loops != 0) os << "; loops=" << loops;
  return os.str();
}

ChordDiagram ChordDiagram::parse(const std::string& s) {
  ChordDiagram d;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  parts.push_back(cur);
  auto trim = [](std::string t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  if (parts.empty()) throw std::invalid_argument("empty diagram text");
  std::string head = trim(parts[0]);
  if (head.rfind("k=", 0) != 0) throw std::invalid_argument("diagram text must start with k=");
  int k = std::stoi(head.substr(2));
  if (k < 1 || k > 15) throw std::invalid_argument("diagram chord count out of range");
  d.points = 2 * k;
  d.match.assign(d.points, -1);
  if (parts.size() < 2) throw std::invalid_argument("diagram text missing matching");
  std::istringstream is(parts[1]);
  std::string tok;
  while (is >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad chord token: " + tok);
    int a = std::stoi(tok.substr(0, dash));
    int b = std::stoi(tok.substr(dash + 1));
    if (a < 0 || b < 0 || a >= d.points || b >= d.points || a == b)
      throw std::invalid_argument("chord endpoint out of range: " + tok);
    if (d.match[a] != -1 || d.match[b] != -1)
      throw std::invalid_argument("repeated endpoint: " + tok);
    d.match[a] = b;
    d.match[b] = a;
  }
  if (parts.size() >= 3) {
    std::string lp = trim(parts[2]);
    if (lp.rfind("loops=", 0) != 0) throw std::invalid_argument("bad loops field");
    d.loops = std::stoi(lp.substr(6));
    if (d.loops < 0) throw std::invalid_argument("negative loops");
  }
  validate_diagram(d);
  return d;
}

ChordDiagram ChordDiagram::from_pairs(int points, const std::vector<std::pair<int, int>>& pairs,
                                       int loops) {
  ChordDiagram d;
  d.points = points;
  d.loops = loops;
  d.match.assign(points, -1);
  for (auto [a, b] : pairs) {
    d.match[a] = b;
    d.match[b] = a;
  }
  return d;
}

void validate_diagram(const ChordDiagram& d) {
  if (d.points <= 0 || d.points % 2 != 0) throw std::invalid_argument("odd/empty point set");
  if (static_cast<int>(d.match.size()) != d.points)
    throw std::invalid_argument("matching size mismatch");
  for (int p = 0; p < d.points; ++p) {
    if (d.match[p] < 0 || d.match[p] >= d.points || d.match[p] == p ||
        d.match[d.match[p]] != p)
      throw std::invalid_argument("not a perfect matching");
  }
  for (auto [a, b] : d.chord_pairs())
    for (auto [c, e] : d.chord_pairs()) {
      // crossing: a < c < b < e
      if (a < c && c < b && b < e) throw std::invalid_argument("crossing chords");
    }
}

namespace {

// match points first..last (inclusive, contiguous) among themselves without
// crossings: pair `first` with an odd-offset point, recurse on both sides
void enumerate_rec(int first, int last, std::vector<int>& match,
                   const std::function<void()>& emit) {
  if (first > last) {
    emit();
    return;
  }
  for (int q = first + 1; q <= last; q += 2) {
    match[first] = q;
    match[q] = first;
    enumerate_rec(first + 1, q - 1, match, [&] { enumerate_rec(q + 1, last, match, emit); });
    match[first] = -1;
    match[q] = -1;
  }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<ChordDiagram> out;
  ChordDiagram scratch;
  scratch.points = 2 * k;
  scratch.loops = 0;
  std::vector<int> match(2 * k, -1);
  enumerate_rec(0, 2 * k - 1, match, [&] {
    scratch.match = match;
    out.push_back(scratch);
  });
  std::sort(out.begin(), out.end());
  return out;
}

ChordDiagram rotate_labels(const ChordDiagram& d, int shift) {
  ChordDiagram r;
  r.points = d.points;
  r.loops = d.loops;
  r.match.assign(d.points, -1);
  auto m = [&](int p) { return ((p + shift) % d.points + d.points) % d.points; };
  for (int p = 0; p < d.points; ++p) r.match[m(p)] = m(d.match[p]);
  return r;
}

ChordDiagram insert_small_chord(const ChordDiagram& d, int pos) {
  ChordDiagram r;
  r.points = d.points + 2;
  r.loops = d.loops;
  r.match.assign(r.points, -1);
  auto m = [&](int p) { return p >= pos ? p + 2 : p; };
  for (int p = 0; p < d.points; ++p) r.match[m(p)] = m(d.match[p]);
  r.match[pos] = pos + 1;
  r.match[pos + 1] = pos;
  return r;
}

ChordDiagram glue_diagrams(const ChordDiagram& d1, int a, const ChordDiagram& d2, int b,
                           int zero_at) {
  if ((a + b) % 2 == 0) throw std::invalid_argument("glue_diagrams: sign-incompatible points");
  int n1 = d1.points, n2 = d2.points;
  int n = n1 + n2 - 2;
  std::vector<std::pair<int, int>> cyc;
  for (int t = 1; t < n2; ++t) cyc.push_back({2, (b + t) % n2});
  for (int t = 1; t < n1; ++t) cyc.push_back({1, (a + t) % n1});
  std::vector<int> label1(n1, -1), label2(n2, -1);
  for (int i = 0; i < n; ++i) {
    auto [which, pt] = cyc[((zero_at + i) % n + n) % n];
    (which == 1 ? label1 : label2)[pt] = i;
  }
  auto far_end = [&](int which, int pt) -> std::pair<int, int> {
    int w = which, p = pt;
    p = (w == 1 ? d1.match[p] : d2.match[p]);
    while ((w == 1 && p == a) || (w == 2 && p == b)) {
      w = (w == 1 ? 2 : 1);
      p = (w == 1 ? a : b);
      p = (w == 1 ? d1.match[p] : d2.match[p]);
    }
    return {w, p};
  };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    auto [which, pt] = cyc[((zero_at + i) % n + n) % n];
    auto [w2, p2] = far_end(which, pt);
    int j = (w2 == 1 ? label1 : label2)[p2];
    if (i < j) pairs.push_back({i, j});
  }
  // the chords through the junction cannot close into a loop here: each
  // junction crossing alternates sides and ends at a free point
  return ChordDiagram::from_pairs(n, pairs, d1.loops + d2.loops);
}

DiscFaces disc_faces(const ChordDiagram& d) {
  if (d.loops != 0) throw std::invalid_argument("disc_faces requires a loop-free diagram");
  validate_diagram(d);
  int n = d.points;
  auto pairs = d.chord_pairs();
  std::vector<int> chord_at(n, -1);  // point -> chord index
  for (int c = 0; c < static_cast<int>(pairs.size()); ++c) {
    chord_at[pairs[c].first] = c;
    chord_at[pairs[c].second] = c;
  }

  DiscFaces f;
  f.face_of_seg.assign(n, -1);
  f.chord_face[0].assign(pairs.size(), -1);
  f.chord_face[1].assign(pairs.size(), -1);

  for (int s0 = 0; s0 < n; ++s0) {
    if (f.face_of_seg[s0] != -1) continue;
    int fid = f.num_faces++;
    f.segs.emplace_back();
    f.side_chord.emplace_back();
    f.side_from.emplace_back();
    f.side_to.emplace_back();
    int s = s0;
    do {
      f.face_of_seg[s] = fid;
      f.segs[fid].push_back(s);
      int pt = (s + 1) % n;
      int c = chord_at[pt];
      int other = d.match[pt];
      f.side_chord[fid].push_back(c);
      f.side_from[fid].push_back(pt);
      f.side_to[fid].push_back(other);
      if (f.chord_face[0][c] == -1)
        f.chord_face[0][c] = fid;
      else if (f.chord_face[0][c] != fid && f.chord_face[1][c] == -1)
        f.chord_face[1][c] = fid;
      s = other;  // segment starting at `other`
    } while (s != s0);
  }

  // a chord with both sides on one face would disconnect the disc; cannot
  // happen, but keep the second slot meaningful
  for (std::size_t c = 0; c < pairs.size(); ++c)
    if (f.chord_face[1][c] == -1) f.chord_face[1][c] = f.chord_face[0][c];

  // depth via enclosing-chord count of any representative segment
  f.depth.assign(f.num_faces, 0);
  for (int fid = 0; fid < f.num_faces; ++fid) {
    int s = f.segs[fid][0];
    int depth = 0;
    for (auto [a, b] : pairs)
      if (a <= s && s < b) ++depth;
    f.depth[fid] = depth;
  }
  return f;
}

int euler_class(const ChordDiagram& d) {
  if (d.loops != 0) throw std::invalid_argument("euler_class requires a loop-free diagram");
  DiscFaces f = disc_faces(d);
  int e = 0;
  for (int fid = 0; fid < f.num_faces; ++fid) e += face_sign(f, fid);
  return e;
}

}  // namespace stqft
