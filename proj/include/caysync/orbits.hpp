#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "caysync/error.hpp"

namespace caysync {

// 0/1 sequence of fixed length n; encodes a k-subset of C_n by the
// positions of its ones (bit j set means a^j is in the subset).
struct BinarySeq {
  std::vector<std::uint8_t> bits;

  std::size_t length() const { return bits.size(); }

  std::size_t weight() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
  }

  std::string str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  static BinarySeq from_string(const std::string& s) {
    BinarySeq b;
    b.bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') throw invalid_argument_error("binary sequence: bad character");
      b.bits.push_back(c == '1');
    }
    return b;
  }

  BinarySeq rotated_left(std::size_t r) const {
    const std::size_t n = bits.size();
    BinarySeq out;
    out.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.bits[i] = bits[(i + r) % n];
    return out;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) v.push_back(i);
    }
    return v;
  }

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;
};

// Lattice-path test: reading left to right as up (1) and right (0) moves,
// the walk must touch or stay above the line from (0,0) to (n-k, k).
// Integer-scaled: after u ones and r zeros, require u*(n-k) >= r*k.
inline bool is_path(const BinarySeq& s) {
  const long long n = static_cast<long long>(s.length());
  const long long k = static_cast<long long>(s.weight());
  long long u = 0, r = 0;
  for (auto b : s.bits) {
    if (b) {
      ++u;
    } else {
      ++r;
    }
    if (u * (n - k) < r * k) return false;
  }
  return true;
}

// Cycle-lemma canonicalization: track the integer-scaled partial sums
// u*(n-k) - r*k, find the first index attaining the minimum, and rotate the
// next position to the front. The result is a path in the same cyclic
// orbit. Degenerate weights (k = 0 or k = n) are returned unchanged.
inline BinarySeq canonical_path(const BinarySeq& s) {
  const std::size_t n = s.length();
  const std::size_t k = s.weight();
  if (k == 0 || k == n) return s;
  long long partial = 0;
  long long min_partial = 0;
  std::size_t min_index = 0;  // 0 means "before the first symbol"
  for (std::size_t i = 0; i < n; ++i) {
    partial += s.bits[i] ? static_cast<long long>(n - k) : -static_cast<long long>(k);
    if (partial < min_partial) {
      min_partial = partial;
      min_index = i + 1;
    }
  }
  // min_index == n rotates by a full period, i.e. s was already a path.
  return s.rotated_left(min_index % n);
}

// Lexicographically least rotation; canonical orbit representative used to
// deduplicate paths when gcd(n, k) > 1.
inline BinarySeq lex_least_rotation(const BinarySeq& s) {
  const std::size_t n = s.length();
  BinarySeq best = s;
  for (std::size_t r = 1; r < n; ++r) {
    BinarySeq cand = s.rotated_left(r);
    if (cand.bits < best.bits) best = cand;
  }
  return best;
}

// A path together with the k-subset it encodes.
struct PathRep {
  BinarySeq seq;
  std::vector<std::size_t> subset;  // exponents of the members a^j
};

// All weight-k paths of length n, in decreasing lexicographic order of the
// bit strings. When gcd(n, k) = 1 this is exactly one representative per
// rotation orbit (count C(n,k)/n for 0 < k < n). When gcd(n, k) > 1 an
// orbit may contribute several paths; dedup = true keeps only the
// lexicographically-least-rotation representative of each orbit.
inline std::vector<PathRep> enumerate_path_reps(std::size_t n, std::size_t k,
                                                bool dedup = false) {
  if (k > n) throw invalid_argument_error("enumerate_path_reps: weight exceeds length");
  std::vector<PathRep> out;
  BinarySeq cur;
  cur.bits.assign(n, 0);
  std::fill(cur.bits.begin(), cur.bits.begin() + static_cast<long>(k), 1);
  std::set<std::vector<std::uint8_t>> seen_orbits;
  do {
    if (!is_path(cur)) continue;
    if (dedup && !seen_orbits.insert(lex_least_rotation(cur).bits).second) continue;
    out.push_back({cur, cur.ones()});
  } while (std::prev_permutation(cur.bits.begin(), cur.bits.end()));
  return out;
}

}  // namespace caysync
