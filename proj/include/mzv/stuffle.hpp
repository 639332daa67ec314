#pragma once

// Stuffle (quasi-shuffle) product assembled from interleaving patterns.
//
// Splitting the summation range of zeta(left)*zeta(right) into totally
// ordered regions yields one zeta per pattern in M_{m-a, m'-a, a}: a slot
// tagged Left takes the next left part, Right the next right part, and Both
// the sum of the next left and right parts (coinciding summation indices).

#include "mzv/combination.hpp"

#include <stdexcept>
#include <vector>

namespace mzv {

enum class Slot : unsigned char { Left, Right, Both };

using InterleavingPattern = std::vector<Slot>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int merge_parts(int a, int b) { return a + b; }

namespace detail {

inline void enumerate_patterns(int left, int right, int both, InterleavingPattern& cur,
                               std::vector<InterleavingPattern>& out) {
  if (left == 0 && right == 0 && both == 0) {
    out.push_back(cur);
    return;
  }
  const auto recurse = [&](Slot s, int l, int r, int b) {
    cur.push_back(s);
    enumerate_patterns(l, r, b, cur, out);
    cur.pop_back();
  };
  if (left > 0) recurse(Slot::Left, left - 1, right, both);
  if (right > 0) recurse(Slot::Right, left, right - 1, both);
  if (both > 0) recurse(Slot::Both, left, right, both - 1);
}

}  // namespace detail

/// All distinct patterns with the given slot counts, in lexicographic slot order.
inline std::vector<InterleavingPattern> interleavings(int left, int right, int both) {
  if (left < 0 || right < 0 || both < 0) throw ShapeError("interleaving counts must be non-negative");
  std::vector<InterleavingPattern> out;
  InterleavingPattern cur;
  cur.reserve(left + right + both);
  detail::enumerate_patterns(left, right, both, cur, out);
  return out;
}

/// The rho map: consumes left and right parts in order along the pattern.
template <class Part>
std::vector<Part> rho(const std::vector<Part>& left, const std::vector<Part>& right, const InterleavingPattern& pattern) {
  std::size_t nl = 0, nr = 0, nb = 0;
  for (Slot s : pattern) (s == Slot::Left ? nl : s == Slot::Right ? nr : nb)++;
  if (nl + nb != left.size() || nr + nb != right.size())
    throw ShapeError("interleaving pattern does not match composition lengths");
  std::vector<Part> out;
  out.reserve(pattern.size());
  std::size_t i = 0, j = 0;
  for (Slot s : pattern) {
    switch (s) {
      case Slot::Left: out.push_back(left[i++]); break;
      case Slot::Right: out.push_back(right[j++]); break;
      case Slot::Both: out.push_back(merge_parts(left[i++], right[j++])); break;
    }
  }
  return out;
}

inline Composition rho(const Composition& left, const Composition& right, const InterleavingPattern& pattern) {
  return Composition(rho(left.parts(), right.parts(), pattern));
}

/// Sum over a = 0..min(m, m') and all patterns of zeta(rho(left, right, pattern)).
template <class Part>
BasicCombination<Part> stuffle(const std::vector<Part>& left, const std::vector<Part>& right) {
  BasicCombination<Part> out;
  const int m = static_cast<int>(left.size()), mp = static_cast<int>(right.size());
  for (int a = 0; a <= std::min(m, mp); ++a)
    for (const auto& pattern : interleavings(m - a, mp - a, a)) out.add({rho(left, right, pattern)}, Rational(1));
  return out;
}

inline ZetaCombination stuffle(const Composition& left, const Composition& right) {
  return stuffle(left.parts(), right.parts());
}

/// Bilinear extension to combinations whose terms are single factors.
inline ZetaCombination stuffle(const ZetaCombination& a, const ZetaCombination& b) {
  ZetaCombination out;
  for (const auto& [fa, ca] : a.map())
    for (const auto& [fb, cb] : b.map()) {
      if (fa.size() != 1 || fb.size() != 1) throw ShapeError("bilinear stuffle needs single-factor terms");
      out.add(stuffle(fa.front(), fb.front()), ca * cb);
    }
  return out;
}

}  // namespace mzv
