// Words in a free group: sequences of signed generator indices.
// Letter encoding: +(i+1) is generator i, -(i+1) is its inverse.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace sigmastar {

using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Letter make_letter(int gen_index, bool inverse) {
  return inverse ? -(gen_index + 1) : (gen_index + 1);
}

inline int gen_of(Letter l) { return std::abs(l) - 1; }
inline bool is_inverse(Letter l) { return l < 0; }

// Removes adjacent x x^-1 pairs until none remain.
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Freely reduces, then trims conjugating prefix/suffix pairs.
inline Word cyclic_reduce(const Word& w) {
  Word v = free_reduce(w);
  size_t i = 0, j = v.size();
  while (j - i >= 2 && v[i] == -v[j - 1]) {
    ++i;
    --j;
  }
  return Word(v.begin() + i, v.begin() + j);
}

// True iff the cyclic reduction of w equals u^k for some k >= 2.
inline bool is_proper_power(const Word& w) {
  Word v = cyclic_reduce(w);
  size_t n = v.size();
  if (n < 2) return false;
  for (size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = d; i < n && periodic; ++i) periodic = (v[i] == v[i - d]);
    if (periodic) return true;
  }
  return false;
}

// Rank used by word orders: generators interleaved with their inverses,
// inverse just above its generator (x < x^-1 < y < y^-1 ...).
inline int letter_rank(Letter l) {
  return 2 * gen_of(l) + (is_inverse(l) ? 1 : 0);
}

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace sigmastar
