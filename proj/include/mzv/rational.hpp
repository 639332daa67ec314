#pragma once

// Exact rational scalars used by the symbolic layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Serialize as "p/q" with q > 0 (integers are written "p/1").
inline std::string to_fraction_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_fraction(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto check_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(check_int(text));
  Integer p = check_int(text.substr(0, slash));
  Integer q = check_int(text.substr(slash + 1));
  if (q == 0) throw bad();
  return Rational(p, q);
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace mzv
