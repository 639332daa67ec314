#pragma once

// Exact-rational linear combinations of formal products of MZV symbols.
//
// A combination is kept normalized at all times: terms are keyed by their
// sorted factor multiset, so like terms merge on insertion and zero
// coefficients are erased.  Iteration follows the canonical term order.

#include "mzv/composition.hpp"
#include "mzv/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

/// Weight contribution of one part; specialised by symbolic part types.
inline int part_weight(int k) { return k; }
/// A part that makes a factor divergent when it leads (zeta(1,...)).
inline bool divergent_head(int k) { return k == 1; }

template <class Part>
int parts_weight(const std::vector<Part>& parts) {
  int w = 0;
  for (const auto& p : parts) w += part_weight(p);
  return w;
}

template <class Part>
bool factor_less(const std::vector<Part>& a, const std::vector<Part>& b) {
  const int wa = parts_weight(a), wb = parts_weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

template <class Part>
struct FactorListLess {
  bool operator()(const std::vector<std::vector<Part>>& a, const std::vector<std::vector<Part>>& b) const {
    int wa = 0, wb = 0;
    for (const auto& f : a) wa += parts_weight(f);
    for (const auto& f : b) wb += parts_weight(f);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), factor_less<Part>);
  }
};

template <class Part>
struct BasicProductTerm {
  std::vector<std::vector<Part>> factors;  // sorted by factor_less
  Rational coefficient;

  int weight() const {
    int w = 0;
    for (const auto& f : factors) w += parts_weight(f);
    return w;
  }
  bool regularized() const {
    for (const auto& f : factors)
      if (!f.empty() && divergent_head(f.front())) return true;
    return false;
  }
};

template <class Part>
class BasicCombination {
 public:
  using Factor = std::vector<Part>;
  using Factors = std::vector<Factor>;
  using Term = BasicProductTerm<Part>;
  using Map = std::map<Factors, Rational, FactorListLess<Part>>;

  BasicCombination() = default;

  /// Builds the normalized combination of an arbitrary term list.
  static BasicCombination from_terms(const std::vector<Term>& terms) {
    BasicCombination c;
    for (const auto& t : terms) c.add(t.factors, t.coefficient);
    return c;
  }

  /// coeff * zeta(parts)
  static BasicCombination single(Factor parts, Rational coeff = 1) {
    BasicCombination c;
    c.add({std::move(parts)}, std::move(coeff));
    return c;
  }

  /// coeff * prod zeta(f)
  static BasicCombination product(Factors factors, Rational coeff = 1) {
    BasicCombination c;
    c.add(std::move(factors), std::move(coeff));
    return c;
  }

  static BasicCombination constant(Rational value) { return product({}, std::move(value)); }

  void add(Factors factors, const Rational& coeff) {
    if (coeff == 0) return;
    std::sort(factors.begin(), factors.end(), factor_less<Part>);
    auto [it, inserted] = terms_.try_emplace(std::move(factors), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const BasicCombination& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [f, c] : other.terms_) add(f, c * scale);
  }

  const Map& map() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [f, c] : terms_) out.push_back({f, c});
    return out;
  }

  Rational coefficient(Factors factors) const {
    std::sort(factors.begin(), factors.end(), factor_less<Part>);
    auto it = terms_.find(factors);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// True when any factor is divergent (zeta(1) or zeta(1,...)).
  bool regularized() const {
    for (const auto& [f, c] : terms_)
      if (Term{f, c}.regularized()) return true;
    return false;
  }

  /// The common weight of all terms; empty for mixed or empty combinations.
  std::optional<int> weight() const {
    std::optional<int> w;
    for (const auto& [f, c] : terms_) {
      const int tw = Term{f, c}.weight();
      if (w && *w != tw) return std::nullopt;
      w = tw;
    }
    return w;
  }

  BasicCombination& operator+=(const BasicCombination& o) {
    add(o);
    return *this;
  }
  BasicCombination& operator-=(const BasicCombination& o) {
    add(o, Rational(-1));
    return *this;
  }
  BasicCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [f, c] : terms_) c *= s;
    return *this;
  }

  friend BasicCombination operator+(BasicCombination a, const BasicCombination& b) { return a += b; }
  friend BasicCombination operator-(BasicCombination a, const BasicCombination& b) { return a -= b; }
  friend BasicCombination operator-(BasicCombination a) { return a *= Rational(-1); }
  friend BasicCombination operator*(BasicCombination a, const Rational& s) { return a *= s; }
  friend BasicCombination operator*(const Rational& s, BasicCombination a) { return a *= s; }

  /// Formal product of two combinations (factor lists concatenate).
  friend BasicCombination operator*(const BasicCombination& a, const BasicCombination& b) {
    BasicCombination out;
    for (const auto& [fa, ca] : a.terms_)
      for (const auto& [fb, cb] : b.terms_) {
        Factors f = fa;
        f.insert(f.end(), fb.begin(), fb.end());
        out.add(std::move(f), ca * cb);
      }
    return out;
  }

  friend bool operator==(const BasicCombination& a, const BasicCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

using ProductTerm = BasicProductTerm<int>;
using ZetaCombination = BasicCombination<int>;

/// Re-normalizes an arbitrary term list (like-term merge, zero drop, canonical order).
inline ZetaCombination normalize(const std::vector<ProductTerm>& terms) { return ZetaCombination::from_terms(terms); }
inline ZetaCombination normalize(const ZetaCombination& c) { return c; }

inline ZetaCombination zeta(Parts parts, Rational coeff = 1) { return ZetaCombination::single(std::move(parts), std::move(coeff)); }

/// Human-readable form in zeta(...) notation, e.g. "2*zeta(2,2) + zeta(4)".
template <class Part, class PartFormatter>
std::string format_combination(const BasicCombination<Part>& c, PartFormatter fmt_part) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [factors, coeff] : c.map()) {
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const bool unit = (mag == 1);
    if (!unit || factors.empty()) {
      const Integer p = numerator_of(mag), q = denominator_of(mag);
      out += q == 1 ? p.str() : "(" + p.str() + "/" + q.str() + ")";
      if (!factors.empty()) out += "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += "ζ(";
      for (std::size_t j = 0; j < factors[i].size(); ++j) {
        if (j) out += ",";
        out += fmt_part(factors[i][j]);
      }
      out += ")";
    }
  }
  return out;
}

inline std::string format_combination(const ZetaCombination& c) {
  return format_combination(c, [](int k) { return std::to_string(k); });
}

}  // namespace mzv
