#pragma once

// Compositions (k1,...,km) indexing Euler-Zagier sums, stored outermost
// index first: zeta(k1,...,km) = sum over n1 > n2 > ... > nm > 0.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// Raised for malformed compositions, words and composition strings.
class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plain exponent list; the key type of every symbolic combination.
using Parts = std::vector<int>;

struct Profile {
  int weight = 0;
  int depth = 0;
  bool admissible = false;
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Exponents plus optional signs sigma_j in {+1,-1} for alternating sums.
class Composition {
 public:
  Composition() = default;

  explicit Composition(Parts parts) : Composition(std::move(parts), {}) {}

  Composition(Parts parts, std::vector<std::int8_t> signs)
      : parts_(std::move(parts)), signs_(std::move(signs)) {
    if (parts_.empty()) throw CompositionError("composition must have at least one part");
    for (int k : parts_)
      if (k < 1) throw CompositionError("composition parts must be >= 1");
    if (signs_.empty()) signs_.assign(parts_.size(), 1);
    if (signs_.size() != parts_.size()) throw CompositionError("sign list length differs from part list");
    for (auto s : signs_)
      if (s != 1 && s != -1) throw CompositionError("signs must be +1 or -1");
  }

  Composition(std::initializer_list<int> parts) : Composition(Parts(parts)) {}

  const Parts& parts() const noexcept { return parts_; }
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }

  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool unsigned_sum() const noexcept {
    return std::all_of(signs_.begin(), signs_.end(), [](auto s) { return s == 1; });
  }

  /// Convergence of the nested series: k1 >= 2, or a leading alternating sign.
  bool admissible() const noexcept {
    if (parts_.empty()) return false;
    return parts_.front() >= 2 || signs_.front() == -1;
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  Parts parts_;
  std::vector<std::int8_t> signs_;
};

inline Profile profile(const Composition& c) { return {c.weight(), c.depth(), c.admissible()}; }

inline int weight_of(std::span<const int> parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

/// Canonical composition order: weight, then depth, then lexicographic.
inline bool canonical_less(const Parts& a, const Parts& b) {
  const int wa = weight_of(a), wb = weight_of(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Parses "3,1" or "2,-1" (a leading '-' marks sigma = -1 on that part).
inline Composition parse_composition(std::string_view text) {
  Parts parts;
  std::vector<std::int8_t> signs;
  std::size_t pos = 0;
  if (text.empty()) throw CompositionError("empty composition string");
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int8_t sign = 1;
    if (!tok.empty() && tok.front() == '-') {
      sign = -1;
      tok.remove_prefix(1);
    }
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw CompositionError("malformed composition string: '" + std::string(text) + "'");
    parts.push_back(value);
    signs.push_back(sign);
    pos = comma + 1;
  }
  return Composition(std::move(parts), std::move(signs));
}

inline std::string format_parts(const Parts& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

inline std::string format_composition(const Composition& c) {
  std::string out;
  for (int i = 0; i < c.depth(); ++i) {
    if (i) out += ',';
    if (c.signs()[i] == -1) out += '-';
    out += std::to_string(c.parts()[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << format_composition(c); }

/// All compositions of weight w, in canonical order.
inline std::vector<Parts> compositions_of_weight(int w) {
  std::vector<Parts> out;
  if (w <= 0) return out;
  Parts cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      self(self, left - k);
      cur.pop_back();
    }
  };
  rec(rec, w);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Admissible (k1 >= 2) compositions with weight between 2 and max_weight.
inline std::vector<Parts> admissible_compositions(int max_weight) {
  std::vector<Parts> out;
  for (int w = 2; w <= max_weight; ++w)
    for (auto& p : compositions_of_weight(w))
      if (p.front() >= 2) out.push_back(std::move(p));
  return out;
}

/// Iterated-integral word: k -> 0^{k-1} 1.
inline std::vector<int> to_word(const Composition& c) {
  if (!c.unsigned_sum()) throw CompositionError("words are defined for unsigned sums only");
  if (!c.admissible()) throw CompositionError("to_word requires an admissible composition");
  std::vector<int> w;
  w.reserve(c.weight());
  for (int k : c.parts()) {
    w.insert(w.end(), k - 1, 0);
    w.push_back(1);
  }
  return w;
}

/// Splits a word ending in 1 into its composition, without the admissibility check.
inline Parts word_to_parts(std::span<const int> w) {
  Parts parts;
  int run = 0;
  for (int letter : w) {
    if (letter != 0 && letter != 1) throw CompositionError("word letters must be 0 or 1");
    ++run;
    if (letter == 1) {
      parts.push_back(run);
      run = 0;
    }
  }
  if (run != 0) throw CompositionError("word must end in 1");
  return parts;
}

inline Composition from_word(std::span<const int> w) {
  if (w.empty() || w.front() != 0) throw CompositionError("word must start with 0");
  return Composition(word_to_parts(w));
}

}  // namespace mzv
