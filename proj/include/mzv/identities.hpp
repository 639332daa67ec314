#pragma once

// Closed-form emitters for the identity families obtained from the
// diagrammatic manipulations: reflection and permutation (stuffle)
// identities, the three-point relation, partial-integration identities of
// length 2, 3 and m (rightward and leftward orders), the trailing-one
// special case, and shuffle products from the peacock recursion.
//
// Every emitter returns an Identity whose combination is asserted to vanish.
// Intermediate zeta(1) terms are kept symbolically and removed by
// eliminate_zeta1, which replaces zeta(1)zeta(K) - zeta(1,K) by a sum over
// increments and insertions.

#include "mzv/combination.hpp"
#include "mzv/stuffle.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Divergent terms that survive the elimination.
class EliminationError : public std::runtime_error {
 public:
  EliminationError(const std::string& what, ZetaCombination unchanged)
      : std::runtime_error(what), combination_(std::move(unchanged)) {}
  const ZetaCombination& combination() const noexcept { return combination_; }

 private:
  ZetaCombination combination_;
};

enum class Variant { None, Rightward, Alternative, Leftward };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::Rightward: return "rightward";
    case Variant::Alternative: return "alternative";
    case Variant::Leftward: return "leftward";
    case Variant::None: break;
  }
  return "";
}

inline Variant parse_variant(const std::string& s) {
  if (s == "rightward") return Variant::Rightward;
  if (s == "alternative") return Variant::Alternative;
  if (s == "leftward") return Variant::Leftward;
  if (s.empty() || s == "none") return Variant::None;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

struct Identity {
  ZetaCombination combination;      // asserted == 0, normalized
  std::string family;
  std::vector<Parts> parameters;
  Variant variant = Variant::None;
  bool final_family = false;        // emitter guarantees zeta(1)-freedom
  std::vector<std::string> derivation;

  bool regularized() const { return combination.regularized(); }
};

/// One catalog row: family name, parameter grammar, whether output is zeta(1)-free.
struct FamilyInfo {
  std::string name;
  std::string grammar;
  bool final_family;
  std::string description;
};

inline const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {"reflection", "a b", false, "zeta(a,b)+zeta(b,a) = zeta(a)zeta(b) - zeta(a+b)"},
      {"permutation", "k1,..,km l1,..,ln", false, "stuffle(left,right) = zeta(left)zeta(right)"},
      {"three_point", "a b c", false, "three-point relation applied at the root of the length-3 sea shell"},
      {"partial_integration_length2", "a b", true, "G_{a,0,b} reduced by partial integration; a >= 2"},
      {"partial_integration_length3", "a b c [--variant rightward|alternative]", true,
       "G_{a,0,b,0,c} reduced by partial integration; a >= 2"},
      {"partial_integration_general", "k1,..,km [--variant rightward|leftward]", true,
       "rightward: length-m sea shell from the right; leftward: zeta(k1)zeta(k2,..,km)"},
      {"trailing_one", "k1,..,k(m-1),1", true, "zeta(K,1) with divergent terms removed"},
      {"shuffle", "k1,..,km l1,..,ln", true, "peacock recursion Z(0|left|right)"},
  };
  return catalog;
}

inline const FamilyInfo& family_info(const std::string& name) {
  for (const auto& f : family_catalog())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown identity family '" + name + "'");
}

namespace detail {

inline Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }
inline Rational binom(long n, long k) { return Rational(binomial(n, k)); }

inline Identity make_identity(ZetaCombination comb, std::string family, std::vector<Parts> params,
                              Variant variant = Variant::None) {
  Identity id;
  id.combination = std::move(comb);
  id.family = std::move(family);
  id.parameters = std::move(params);
  id.variant = variant;
  id.final_family = family_info(id.family).final_family;
  return id;
}

inline void require_parts(const Parts& p, const char* what) {
  if (p.empty()) throw PreconditionError(std::string(what) + ": empty composition");
  for (int k : p)
    if (k < 1) throw PreconditionError(std::string(what) + ": parts must be >= 1");
}

}  // namespace detail

/// Right-hand side of zeta(1)zeta(K) - zeta(1,K): all single increments of a
/// part plus all insertions of a 1 after a part.
inline ZetaCombination zeta1_replacement(const Parts& K) {
  ZetaCombination out;
  for (std::size_t i = 0; i < K.size(); ++i) {
    Parts inc = K;
    inc[i] += 1;
    out.add({inc}, 1);
    Parts ins = K;
    ins.insert(ins.begin() + static_cast<long>(i) + 1, 1);
    out.add({ins}, 1);
  }
  return out;
}

/// Removes divergent factors.  Every product containing a divergent factor is
/// expanded by the stuffle, so c*(zeta(1)zeta(K) - zeta(1,K)) becomes
/// c * zeta1_replacement(K); the divergent single factors left over must cancel.
inline ZetaCombination eliminate_zeta1(const ZetaCombination& comb, std::vector<std::string>* trace = nullptr) {
  ZetaCombination cur = comb;
  for (;;) {
    bool changed = false;
    for (const auto& [factors, coeff] : cur.map()) {
      if (factors.size() < 2) continue;
      if (std::none_of(factors.begin(), factors.end(), [](const Parts& f) { return f.front() == 1; })) continue;
      const auto fs = factors;
      const Rational c = coeff;
      ZetaCombination expanded = zeta(fs[0]);
      for (std::size_t i = 1; i < fs.size(); ++i) expanded = stuffle(expanded, zeta(fs[i]));
      if (trace)
        trace->push_back("stuffle-expand " + format_combination(ZetaCombination::product(fs, c)));
      cur -= ZetaCombination::product(fs, c);
      cur += c * expanded;
      changed = true;
      break;
    }
    if (!changed) break;
  }
  if (cur.regularized()) {
    std::string bad;
    for (const auto& t : cur.terms())
      if (t.regularized()) bad += (bad.empty() ? "" : ", ") + format_combination(ZetaCombination::product(t.factors, t.coefficient));
    throw EliminationError("unmatched divergent terms: " + bad, comb);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Depth-2 and stuffle families

inline Identity reflection(int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("reflection: arguments must be >= 1");
  ZetaCombination c = zeta({a, b}) + zeta({b, a}) - ZetaCombination::product({{a}, {b}}) + zeta({a + b});
  auto id = detail::make_identity(std::move(c), "reflection", {{a}, {b}});
  id.derivation.push_back("reverse the middle zero propagator of the length-2 sea shell");
  return id;
}

inline Identity permutation_identity(const Parts& left, const Parts& right) {
  detail::require_parts(left, "permutation");
  detail::require_parts(right, "permutation");
  ZetaCombination c = stuffle(left, right) - ZetaCombination::product({left, right});
  auto id = detail::make_identity(std::move(c), "permutation", {left, right});
  id.derivation.push_back("reorder summation ranges over interleavings M_{m-a,m'-a,a}");
  return id;
}

inline Identity three_point_identity(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw PreconditionError("three_point: arguments must be >= 1");
  using P = ZetaCombination;
  P comb = zeta({a, b, c}) + zeta({b, c, a}) + zeta({c, a, b}) - zeta({a + b + c}) - P::product({{a}, {b, c}}) -
           P::product({{b}, {c, a}}) - P::product({{c}, {a, b}}) + P::product({{a}, {b}, {c}});
  auto id = detail::make_identity(std::move(comb), "three_point", {{a}, {b}, {c}});
  id.derivation.push_back("three-point relation on the two zero propagators entering the root");
  return id;
}

// ---------------------------------------------------------------------------
// Partial integration, length 2

/// Raw right-hand side for zeta(a,b) including the zeta(1) terms.
inline ZetaCombination partial_integration_length2_rhs_raw(int a, int b) {
  using detail::binom;
  using detail::sign_pow;
  ZetaCombination r;
  for (int n = 1; n <= b; ++n) r.add({{n}, {a + b - n}}, sign_pow(b + n) * binom(a + b - n - 1, a - 1));
  for (int n = 1; n <= a; ++n) r.add({{n, a + b - n}}, sign_pow(b) * binom(a + b - n - 1, b - 1));
  return r;
}

/// Right-hand side for zeta(a,b) with the divergent pair already replaced.
inline ZetaCombination partial_integration_length2_rhs(int a, int b) {
  using detail::binom;
  using detail::sign_pow;
  ZetaCombination r;
  for (int n = 2; n <= b; ++n) r.add({{n}, {a + b - n}}, sign_pow(b + n) * binom(a + b - n - 1, a - 1));
  for (int n = 2; n <= a; ++n) r.add({{n, a + b - n}}, sign_pow(b) * binom(a + b - n - 1, b - 1));
  const Rational c = -sign_pow(b) * binom(a + b - 2, a - 1);
  r.add({{a + b}}, c);
  r.add({{a + b - 1, 1}}, c);
  return r;
}

inline Identity partial_integration_length2(int a, int b) {
  if (a < 2) throw PreconditionError("partial_integration_length2 requires a >= 2");
  if (b < 1) throw PreconditionError("partial_integration_length2 requires b >= 1");
  auto id = detail::make_identity(zeta({a, b}) - partial_integration_length2_rhs(a, b), "partial_integration_length2",
                                  {{a}, {b}});
  id.derivation = {"G_{a,0,b} = zeta(a,b)", "partial integration at the upper vertex until a=0 or c=0",
                   "replace zeta(1)zeta(a+b-1) - zeta(1,a+b-1) by the reflection identity"};
  return id;
}

// ---------------------------------------------------------------------------
// Partial integration, length 3

/// Rightward order: exchange of the inner propagators k and l.
inline ZetaCombination partial_integration_length3_rhs_raw(int a, int b, int c) {
  using detail::binom;
  using detail::sign_pow;
  ZetaCombination r;
  const int w = a + b + c;
  for (int n = 1; n <= c; ++n) {
    for (int m = 1; m <= a; ++m) {
      // multinomial (w-m-n-1; b-1, a-m, c-n)
      const Rational mult = binom(b + c - n - 1, b - 1) * binom(w - m - n - 1, b + c - n - 1);
      r.add({{m, w - m - n, n}}, sign_pow(b) * mult);
    }
    for (int m = 1; m <= b + c - n; ++m)
      r.add({{m}, {w - m - n, n}}, sign_pow(b + m) * binom(b + c - n - 1, b - 1) * binom(w - m - n - 1, a - 1));
  }
  for (int n = 1; n <= b; ++n) r.add({{a, n, b + c - n}}, sign_pow(c) * binom(b + c - n - 1, c - 1));
  return r;
}

/// Alternative order: exchange of the propagators k and c.
inline ZetaCombination partial_integration_length3_alt_rhs_raw(int a, int b, int c) {
  using detail::binom;
  using detail::sign_pow;
  ZetaCombination r;
  for (int n = 1; n <= b; ++n) r.add({{a, n, b + c - n}}, sign_pow(c) * binom(b + c - n - 1, c - 1));
  for (int n = 1; n <= c; ++n)
    for (int m = 1; m <= a; ++m)
      r.add({{m, a - m + n, b - n + c}}, sign_pow(c) * binom(b + c - n - 1, b - 1) * binom(a - m + n - 1, n - 1));
  for (int n = 1; n <= c; ++n)
    for (int m = 1; m <= n; ++m)
      r.add({{m}, {a - m + n, b - n + c}},
            sign_pow(c - m) * binom(a - m + n - 1, a - 1) * binom(b - n + c - 1, b - 1));
  return r;
}

inline Identity partial_integration_length3(int a, int b, int c, Variant variant = Variant::Rightward) {
  if (a < 2) throw PreconditionError("partial_integration_length3 requires a >= 2");
  if (b < 1 || c < 1) throw PreconditionError("partial_integration_length3 requires b, c >= 1");
  if (variant != Variant::Rightward && variant != Variant::Alternative)
    throw PreconditionError("partial_integration_length3 variant must be rightward or alternative");
  const auto rhs = variant == Variant::Rightward ? partial_integration_length3_rhs_raw(a, b, c)
                                                 : partial_integration_length3_alt_rhs_raw(a, b, c);
  Identity id;
  id.derivation = {"G_{a,0,b,0,c} = zeta(a,b,c)", "partial integration at the upper right vertex until b=0 or c=0",
                   variant == Variant::Rightward ? "exchange inner propagators k and l in the b=0 terms"
                                                 : "exchange propagators k and c in the b=0 terms",
                   "partial integration at the upper left vertex"};
  auto comb = eliminate_zeta1(zeta({a, b, c}) - rhs, &id.derivation);
  auto out = detail::make_identity(std::move(comb), "partial_integration_length3", {{a}, {b}, {c}}, variant);
  out.derivation = std::move(id.derivation);
  return out;
}

// ---------------------------------------------------------------------------
// Arbitrary length

namespace detail {

/// Enumerates chained ranges n_{hi}..n_{lo} where n_i runs 1..n_{i+1}
/// except the innermost which may be capped separately.
inline void chained_loops(std::vector<int>& n, int i, int lo, const std::function<int(int)>& upper,
                          const std::function<void()>& body) {
  if (i < lo) {
    body();
    return;
  }
  for (n[i] = 1; n[i] <= upper(i); ++n[i]) chained_loops(n, i - 1, lo, upper, body);
}

}  // namespace detail

/// Right-hand side of the rightward length-m identity (generalizing the
/// alternative length-3 order), zeta(1) terms included.
inline ZetaCombination partial_integration_rightward_rhs_raw(const Parts& kp) {
  using detail::binom;
  using detail::sign_pow;
  const int m = static_cast<int>(kp.size());
  // 1-based views: k[i], n[i], n[m] = k[m]
  std::vector<int> k(m + 1), n(m + 1);
  for (int i = 1; i <= m; ++i) k[i] = kp[i - 1];
  n[m] = k[m];
  ZetaCombination r;
  // Blocks t = 1..m-1: variables n_{m-1} .. n_{m-t}; the innermost runs to k_{m-t}.
  for (int t = 1; t <= m - 1; ++t) {
    const int lo = m - t;
    auto upper = [&](int i) { return i == lo ? k[i] : n[i + 1]; };
    detail::chained_loops(n, m - 1, lo, upper, [&] {
      Rational coeff = sign_pow(k[m]);
      for (int i = lo + 1; i <= m - 1; ++i) coeff *= binom(k[i] - n[i] + n[i + 1] - 1, k[i] - 1);
      coeff *= binom(k[lo] - n[lo] + n[lo + 1] - 1, n[lo + 1] - 1);
      Parts z(k.begin() + 1, k.begin() + lo);
      z.push_back(n[lo]);
      for (int i = lo; i <= m - 1; ++i) z.push_back(k[i] - n[i] + n[i + 1]);
      r.add({z}, coeff);
    });
  }
  // Product block: all n_i chained down to n_1.
  auto upper = [&](int i) { return n[i + 1]; };
  detail::chained_loops(n, m - 1, 1, upper, [&] {
    Rational coeff = sign_pow(k[m] - n[1]);
    for (int i = 1; i <= m - 1; ++i) coeff *= binom(k[i] - n[i] + n[i + 1] - 1, k[i] - 1);
    Parts z;
    for (int i = 1; i <= m - 1; ++i) z.push_back(k[i] - n[i] + n[i + 1]);
    r.add({{n[1]}, z}, coeff);
  });
  return r;
}

/// Right-hand side of zeta(k1)zeta(k2,..,km) in the leftward order.
inline ZetaCombination partial_integration_leftward_rhs(const Parts& kp) {
  using detail::binom;
  const int m = static_cast<int>(kp.size());
  std::vector<int> k(m + 1), n(m + 1);
  for (int i = 1; i <= m; ++i) k[i] = kp[i - 1];
  // n[0] = k1; chained n_1..n_{kappa-1} with n_i <= n_{i-1}; n_kappa <= k_{kappa+1}.
  ZetaCombination r;
  std::function<void(int, int, const std::function<void()>&)> loops = [&](int i, int last, const std::function<void()>& body) {
    if (i > last) {
      body();
      return;
    }
    for (n[i] = 1; n[i] <= n[i - 1]; ++n[i]) loops(i + 1, last, body);
  };
  n[0] = k[1];
  for (int kappa = 1; kappa <= m - 1; ++kappa) {
    loops(1, kappa - 1, [&] {
      for (n[kappa] = 1; n[kappa] <= k[kappa + 1]; ++n[kappa]) {
        Rational coeff = 1;
        for (int l = 2; l <= kappa; ++l) coeff *= binom(k[l] + n[l - 2] - n[l - 1] - 1, k[l] - 1);
        coeff *= binom(k[kappa + 1] + n[kappa - 1] - n[kappa] - 1, n[kappa - 1] - 1);
        Parts z;
        for (int l = 2; l <= kappa + 1; ++l) z.push_back(k[l] + n[l - 2] - n[l - 1]);
        z.push_back(n[kappa]);
        for (int l = kappa + 2; l <= m; ++l) z.push_back(k[l]);
        r.add({z}, coeff);
      }
    });
  }
  loops(1, m - 1, [&] {
    Rational coeff = 1;
    for (int l = 2; l <= m; ++l) coeff *= binom(k[l] + n[l - 2] - n[l - 1] - 1, k[l] - 1);
    Parts z;
    for (int l = 2; l <= m; ++l) z.push_back(k[l] + n[l - 2] - n[l - 1]);
    z.push_back(n[m - 1]);
    r.add({z}, coeff);
  });
  return r;
}

/// Replaces every two-factor product zeta(n)zeta(K) with n a single part by
/// its leftward expansion; other terms pass through.
inline ZetaCombination expand_products_leftward(const ZetaCombination& comb) {
  ZetaCombination out;
  for (const auto& t : comb.terms()) {
    if (t.factors.size() != 2 || (t.factors[0].size() != 1 && t.factors[1].size() != 1)) {
      out.add(t.factors, t.coefficient);
      continue;
    }
    const bool first = t.factors[0].size() == 1;
    Parts kp = first ? t.factors[0] : t.factors[1];
    const Parts& rest = first ? t.factors[1] : t.factors[0];
    kp.insert(kp.end(), rest.begin(), rest.end());
    out.add(partial_integration_leftward_rhs(kp), t.coefficient);
  }
  return out;
}

inline Identity partial_integration_general(const Parts& ks, Variant variant = Variant::Rightward) {
  detail::require_parts(ks, "partial_integration_general");
  if (ks.size() < 2) throw PreconditionError("partial_integration_general requires length >= 2");
  ZetaCombination raw;
  std::vector<std::string> trace;
  if (variant == Variant::Rightward) {
    if (ks.front() < 2) throw PreconditionError("rightward partial integration requires k1 >= 2");
    raw = zeta(ks) - partial_integration_rightward_rhs_raw(ks);
    trace = {"sea shell zeta(k1,..,km)", "partial integrations from the rightmost vertex, exchanging inner propagators"};
  } else if (variant == Variant::Leftward) {
    const Parts rest(ks.begin() + 1, ks.end());
    raw = ZetaCombination::product({{ks.front()}, rest}) - partial_integration_leftward_rhs(ks);
    trace = {"modified sea shell zeta(k1)zeta(k2,..,km)", "partial integrations from the leftmost vertex"};
  } else {
    throw PreconditionError("partial_integration_general variant must be rightward or leftward");
  }
  ZetaCombination comb = raw;
  if (variant == Variant::Leftward && ks[1] == 1) {
    trace.push_back("zeta(k2,..) diverges; identity kept in regularized form");
  } else {
    try {
      comb = eliminate_zeta1(raw, &trace);
    } catch (const EliminationError& e) {
      trace.push_back(std::string("elimination failed: ") + e.what());
    }
  }
  auto id = detail::make_identity(std::move(comb), "partial_integration_general", {ks}, variant);
  id.derivation = std::move(trace);
  return id;
}

/// zeta(K,1) = zeta(1)zeta(K) - sum_kappa sum_n zeta(..,k_kappa+1-n, n,..), zeta(1) removed.
inline ZetaCombination trailing_one_raw(const Parts& ks) {
  const Parts K(ks.begin(), ks.end() - 1);
  ZetaCombination c = zeta(ks) - ZetaCombination::product({{1}, K});
  for (std::size_t kap = 0; kap < K.size(); ++kap)
    for (int n = 1; n <= K[kap]; ++n) {
      Parts z(K.begin(), K.begin() + static_cast<long>(kap));
      z.push_back(K[kap] + 1 - n);
      z.push_back(n);
      z.insert(z.end(), K.begin() + static_cast<long>(kap) + 1, K.end());
      c.add({z}, 1);
    }
  return c;
}

inline Identity trailing_one(const Parts& ks) {
  detail::require_parts(ks, "trailing_one");
  if (ks.back() != 1) throw PreconditionError("trailing_one requires the last part to be 1");
  if (ks.size() < 2 || ks.front() < 2) throw PreconditionError("trailing_one requires length >= 2 and k1 >= 2");
  std::vector<std::string> trace{"special case k_m = 1 of the rightward identity"};
  auto comb = eliminate_zeta1(trailing_one_raw(ks), &trace);
  auto id = detail::make_identity(std::move(comb), "trailing_one", {ks});
  id.derivation = std::move(trace);
  return id;
}

// ---------------------------------------------------------------------------
// Shuffle products from the peacock recursion Z(A|B|C)

/// Expands Z(spine | upper | lower) into zeta values. The spine's last entry
/// is the label of the propagator entering the top vertex.
inline ZetaCombination peacock_expand(const Parts& spine, const Parts& upper, const Parts& lower) {
  using detail::binom;
  if (upper.empty() || lower.empty()) throw PreconditionError("peacock branches must be non-empty");
  auto concat = [](Parts a, const Parts& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  // Z(A|0|C) = zeta(A, C)
  if (upper == Parts{0}) return zeta(concat(spine, lower));
  if (lower == Parts{0}) return zeta(concat(spine, upper));
  // Z(A|0,B|C) = Z(A,0|B|C)
  if (upper.front() == 0) return peacock_expand(concat(spine, {0}), Parts(upper.begin() + 1, upper.end()), lower);
  if (lower.front() == 0) return peacock_expand(concat(spine, {0}), upper, Parts(lower.begin() + 1, lower.end()));
  if (spine.back() != 0) throw PreconditionError("peacock partial integration needs a zero propagator into the top vertex");
  const int b = upper.front(), c = lower.front();
  Parts head(spine.begin(), spine.end() - 1);
  ZetaCombination out;
  for (int nu = 1; nu <= b; ++nu) {
    Parts up = upper, lo = lower;
    up.front() = nu;
    lo.front() = 0;
    out.add(peacock_expand(concat(head, {b + c - nu}), up, lo), binom(b + c - nu - 1, c - 1));
  }
  for (int nu = 1; nu <= c; ++nu) {
    Parts up = upper, lo = lower;
    up.front() = 0;
    lo.front() = nu;
    out.add(peacock_expand(concat(head, {b + c - nu}), up, lo), binom(b + c - nu - 1, b - 1));
  }
  return out;
}

/// zeta(left) zeta(right) = Z(0|left|right) expanded.
inline ZetaCombination shuffle_product(const Parts& left, const Parts& right) { return peacock_expand({0}, left, right); }

inline Identity shuffle_identity(const Parts& left, const Parts& right) {
  detail::require_parts(left, "shuffle");
  detail::require_parts(right, "shuffle");
  if (left.front() < 2 || right.front() < 2) throw PreconditionError("shuffle requires admissible compositions");
  auto id = detail::make_identity(ZetaCombination::product({left, right}) - shuffle_product(left, right), "shuffle",
                                  {left, right});
  id.derivation = {"Z(0|left|right) = zeta(left)zeta(right)",
                   "partial integrations at the top vertex; exchange at zero branch heads",
                   "terminate at Z(A|0|C) = zeta(A,C)"};
  return id;
}

// ---------------------------------------------------------------------------
// Sweeps

/// Every instance of a catalog family whose total weight is at most max_weight.
inline std::vector<Identity> enumerate_family(const std::string& family, int max_weight) {
  family_info(family);
  std::vector<Identity> out;
  const auto adm = admissible_compositions(max_weight);
  if (family == "reflection") {
    for (int a = 2; a <= max_weight; ++a)
      for (int b = 2; a + b <= max_weight; ++b) out.push_back(reflection(a, b));
  } else if (family == "permutation" || family == "shuffle") {
    for (const auto& l : adm)
      for (const auto& r : adm)
        if (weight_of(l) + weight_of(r) <= max_weight)
          out.push_back(family == "shuffle" ? shuffle_identity(l, r) : permutation_identity(l, r));
  } else if (family == "three_point") {
    for (int a = 2; a <= max_weight; ++a)
      for (int b = 2; a + b <= max_weight; ++b)
        for (int c = 2; a + b + c <= max_weight; ++c) out.push_back(three_point_identity(a, b, c));
  } else if (family == "partial_integration_length2") {
    for (int a = 2; a <= max_weight; ++a)
      for (int b = 1; a + b <= max_weight; ++b) out.push_back(partial_integration_length2(a, b));
  } else if (family == "partial_integration_length3") {
    for (int a = 2; a <= max_weight; ++a)
      for (int b = 1; a + b <= max_weight; ++b)
        for (int c = 1; a + b + c <= max_weight; ++c)
          for (auto v : {Variant::Rightward, Variant::Alternative}) out.push_back(partial_integration_length3(a, b, c, v));
  } else if (family == "partial_integration_general") {
    for (int w = 2; w <= max_weight; ++w)
      for (const auto& k : compositions_of_weight(w)) {
        if (k.size() < 2) continue;
        if (k[0] >= 2) out.push_back(partial_integration_general(k, Variant::Rightward));
        if (k[1] >= 2) out.push_back(partial_integration_general(k, Variant::Leftward));
      }
  } else if (family == "trailing_one") {
    for (const auto& k : adm)
      if (k.size() >= 2 && k.back() == 1) out.push_back(trailing_one(k));
  }
  return out;
}

}  // namespace mzv
