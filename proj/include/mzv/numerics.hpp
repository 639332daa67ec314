#pragma once

// High-precision numerical oracle: MZVs by direct nested summation and by
// midpoint (Hoelder) splitting of the iterated-integral word, evaluation of
// combinations with propagated error bounds, circle propagators g^(k), and
// Bernoulli polynomials.

#include "mzv/combination.hpp"
#include "mzv/composition.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>, boost::multiprecision::et_off>;

class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PrecisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value with a rigorous absolute error bound.
struct PrecisionValue {
  Real value = 0;
  Real bound = 0;
};

inline PrecisionValue operator*(const PrecisionValue& a, const PrecisionValue& b) {
  using boost::multiprecision::abs;
  return {a.value * b.value, abs(a.value) * b.bound + abs(b.value) * a.bound + a.bound * b.bound};
}

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const Rational& q) { return Real(numerator_of(q)) / Real(denominator_of(q)); }

/// Decimal digits trusted in Real arithmetic; MZV_PRECISION_DIGITS overrides (30..60).
inline int working_digits() {
  int digits = 50;
  if (const char* env = std::getenv("MZV_PRECISION_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') digits = static_cast<int>(std::clamp(v, 30L, 60L));
  }
  return digits;
}

/// Smallest error bound the accelerated evaluator will promise.
inline Real precision_floor() { return boost::multiprecision::pow(Real(10), -(working_digits() - 8)); }

inline Real rounding_unit() { return boost::multiprecision::pow(Real(10), -working_digits()); }

/// String with the given number of significant digits.
inline std::string to_decimal(const Real& x, int digits = 20) { return x.str(digits, std::ios_base::scientific); }

namespace detail {

/// int_N^inf (1 + ln x)^j x^(-s-1) dx for s > 0.
inline Real log_power_tail(long s, int j, const Real& N) {
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  const Real L = 1 + log(N);
  Real sum = 0, falling = 1;
  for (int i = 0; i <= j; ++i) {
    sum += falling * pow(L, j - i) / pow(Real(s), i + 1);
    falling *= (j - i);
  }
  return sum / pow(N, s);
}

/// Bound on sum_{n>N} C (1+ln n)^j n^(-s-1), switching to the integral once
/// the summand is decreasing.
inline Real log_power_series_tail(long s, int j, long long N, const Real& C) {
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  Real explicit_part = 0;
  long long start = N;
  while ((s + 1) * (1 + std::log(static_cast<double>(start))) < j + 1e-9) {
    ++start;
    explicit_part += C * pow(1 + log(Real(start)), j) / pow(Real(start), s + 1);
  }
  return explicit_part + C * log_power_tail(s, j, Real(start));
}

/// Product bound of the inner sums: factors 1+1/(k-1) for k >= 2 and a
/// power of (1 + ln n) for each k = 1.
struct InnerBound {
  Real constant = 1;
  int log_power = 0;
};

inline InnerBound inner_bound(std::span<const int> inner) {
  InnerBound b;
  for (int k : inner) {
    if (k >= 2)
      b.constant *= 1 + Real(1) / (k - 1);
    else
      ++b.log_power;
  }
  return b;
}

}  // namespace detail

/// Truncated nested sum over N >= n1 > ... > nm > 0 with a rigorous tail bound.
inline PrecisionValue eval_mzv_direct(const Composition& c, long long N) {
  if (N < 1) throw std::invalid_argument("truncation N must be positive");
  if (!c.admissible()) throw DivergenceError("divergent composition zeta(" + format_composition(c) + ")");
  const auto& k = c.parts();
  const auto& sg = c.signs();
  const int m = c.depth();
  // acc[j] = sum over i < n of the level-j term (levels counted from the outside).
  std::vector<long double> acc(m, 0.0L), term(m);
  long double total = 0.0L, comp = 0.0L, abs_total = 0.0L;
  for (long long n = 1; n <= N; ++n) {
    const long double inv = 1.0L / static_cast<long double>(n);
    for (int j = m - 1; j >= 0; --j) {
      long double p = 1.0L;
      for (int e = 0; e < k[j]; ++e) p *= inv;
      if (sg[j] == -1 && (n & 1)) p = -p;
      term[j] = (j == m - 1) ? p : p * acc[j + 1];
    }
    for (int j = 1; j < m; ++j) acc[j] += term[j];
    // Neumaier-compensated outer accumulation.
    const long double t = term[0], s = total + t;
    comp += (std::fabs(total) >= std::fabs(t)) ? (total - s) + t : (t - s) + total;
    total = s;
    abs_total += std::fabs(t);
  }
  PrecisionValue out;
  out.value = Real(total) + Real(comp);
  const auto ib = detail::inner_bound(std::span<const int>(k).subspan(1));
  if (k[0] >= 2) {
    out.bound = detail::log_power_series_tail(k[0] - 1, ib.log_power, N, ib.constant);
  } else if (m == 1) {
    out.bound = Real(1) / Real(N + 1);  // alternating series
  } else {
    out.bound = 2 * detail::log_power_series_tail(1, ib.log_power, N, ib.constant);
  }
  // Floating-point accumulation in the inner levels and the outer sum.
  const long double u = LDBL_EPSILON;
  out.bound += Real(abs_total) * Real(u) * Real(static_cast<double>(N)) * (c.weight() + 2 * m + 4);
  return out;
}

/// Li_{s1..sk}(1/2) = sum_{n1>...>nk>0} 2^{-n1} / prod n_i^{s_i}, to absolute error eps.
inline PrecisionValue polylog_half(const Parts& s, const Real& eps) {
  if (s.empty()) return {Real(1), Real(0)};
  const int k = static_cast<int>(s.size());
  const auto ib = detail::inner_bound(std::span<const int>(s).subspan(1));
  const int j = ib.log_power;
  auto tail = [&](long long N) {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const Real n1 = Real(N + 1);
    const Real F = ib.constant * pow(1 + log(n1), j);
    const Real r = pow(1 + 1 / n1, j) / 2;
    return F / pow(Real(2), N + 1) / (1 - r);
  };
  long long N = std::max<long long>(16, 4LL * j + 8);
  while (tail(N) > eps) N += 8;

  std::vector<Real> acc(k, Real(0)), term(k);
  Real total = 0, half_pow = 1;
  int max_s = *std::max_element(s.begin(), s.end());
  std::vector<Real> inv_pow(max_s + 1);
  for (long long n = 1; n <= N; ++n) {
    const Real inv = Real(1) / Real(n);
    inv_pow[0] = 1;
    for (int e = 1; e <= max_s; ++e) inv_pow[e] = inv_pow[e - 1] * inv;
    for (int lvl = k - 1; lvl >= 0; --lvl) term[lvl] = (lvl == k - 1) ? inv_pow[s[lvl]] : inv_pow[s[lvl]] * acc[lvl + 1];
    for (int lvl = 1; lvl < k; ++lvl) acc[lvl] += term[lvl];
    half_pow /= 2;
    total += half_pow * term[0];
  }
  return {total, tail(N) + rounding_unit() * Real(N) * (k + max_s + 2)};
}

/// Evaluator with per-instance caches; safe to share across threads.
class Oracle {
 public:
  /// zeta(c) via the midpoint split of its iterated-integral word.
  PrecisionValue eval_mzv_accel(const Composition& c, const Real& eps) {
    if (!c.unsigned_sum()) throw DivergenceError("accelerated evaluator handles unsigned sums only");
    return eval_parts(c.parts(), eps);
  }

  PrecisionValue eval_parts(const Parts& parts, const Real& eps) {
    if (parts.empty()) throw std::invalid_argument("empty composition");
    if (parts.front() < 2) throw DivergenceError("divergent composition zeta(" + format_parts(parts) + ")");
    if (eps < precision_floor()) throw PrecisionError("requested bound below the working-precision floor");
    {
      std::lock_guard lock(mu_);
      auto it = zeta_cache_.find(parts);
      if (it != zeta_cache_.end() && it->second.bound <= eps) return it->second;
    }
    const auto word = to_word(Composition(parts));
    const std::size_t n = word.size();
    Real piece_eps = eps / (4 * Real(n + 1));
    for (int attempt = 0; attempt < 12; ++attempt, piece_eps /= 16) {
      PrecisionValue sum;
      for (std::size_t split = 0; split <= n; ++split) {
        // [1/2, 1] part: reversed word with letters flipped, integrated over [0, 1/2].
        std::vector<int> head;
        for (std::size_t i = split; i-- > 0;) head.push_back(1 - word[i]);
        std::vector<int> rest(word.begin() + split, word.end());
        const auto a = half_value(word_to_parts(head), piece_eps);
        const auto b = half_value(word_to_parts(rest), piece_eps);
        const auto prod = a * b;
        sum.value += prod.value;
        sum.bound += prod.bound;
      }
      sum.bound += rounding_unit() * Real(n + 1);
      if (sum.bound <= eps) {
        std::lock_guard lock(mu_);
        zeta_cache_[parts] = sum;
        return sum;
      }
    }
    throw PrecisionError("could not reach requested bound");
  }

  /// Sum of coefficient * product of factor values, bound <= eps.
  PrecisionValue eval_combination(const ZetaCombination& comb, const Real& eps) {
    if (comb.regularized()) throw DivergenceError("combination contains divergent zeta(1,...) factors");
    if (comb.empty()) return {};
    Real weight_sum = 0;
    for (const auto& [factors, coeff] : comb.map())
      weight_sum += boost::multiprecision::abs(to_real(coeff)) * Real(factors.size() + 1);
    Real factor_eps = eps / (4 * weight_sum);
    for (int attempt = 0; attempt < 8; ++attempt, factor_eps /= 16) {
      PrecisionValue total;
      for (const auto& [factors, coeff] : comb.map()) {
        PrecisionValue prod{Real(1), Real(0)};
        for (const auto& f : factors) prod = prod * eval_parts(f, std::max(factor_eps, precision_floor()));
        const Real c = to_real(coeff);
        total.value += c * prod.value;
        total.bound += boost::multiprecision::abs(c) * prod.bound;
      }
      total.bound += rounding_unit() * weight_sum;
      if (total.bound <= eps) return total;
    }
    throw PrecisionError("could not reach requested bound for combination");
  }

 private:
  PrecisionValue half_value(const Parts& s, const Real& eps) {
    {
      std::lock_guard lock(mu_);
      auto it = half_cache_.find(s);
      if (it != half_cache_.end() && it->second.bound <= eps) return it->second;
    }
    auto v = polylog_half(s, eps);
    std::lock_guard lock(mu_);
    half_cache_[s] = v;
    return v;
  }

  std::mutex mu_;
  std::map<Parts, PrecisionValue> zeta_cache_;
  std::map<Parts, PrecisionValue> half_cache_;
};

/// Per-term value table plus residual of a combination asserted to vanish.
struct VerificationReport {
  bool pass = false;
  Real residual = 0;
  Real bound = 0;
  std::vector<std::pair<std::string, Real>> term_values;
};

inline VerificationReport verify_combination(Oracle& oracle, const ZetaCombination& comb, const Real& eps) {
  if (comb.regularized()) throw DivergenceError("regularized identity: eliminate zeta(1) terms first");
  VerificationReport rep;
  const auto total = oracle.eval_combination(comb, eps);
  for (const auto& [factors, coeff] : comb.map()) {
    Real v = to_real(coeff);
    for (const auto& f : factors) v *= oracle.eval_parts(f, eps).value;
    rep.term_values.emplace_back(format_combination(ZetaCombination::product(factors, coeff)), v);
  }
  rep.residual = total.value;
  rep.bound = total.bound;
  rep.pass = boost::multiprecision::abs(total.value) <= total.bound;
  return rep;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials

/// B_0..B_n with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * B[k];
    B[m] = -s / (m + 1);
  }
  return B;
}

inline Rational bernoulli_polynomial(int n, const Rational& x) {
  const auto B = bernoulli_numbers(n);
  Rational r = 0, xp = 1;
  for (int k = n; k >= 0; --k) {
    r += Rational(binomial(n, k)) * B[k] * xp;
    xp *= x;
  }
  return r;
}

inline Real bernoulli_polynomial(int n, const Real& x) {
  const auto B = bernoulli_numbers(n);
  Real r = 0, xp = 1;
  for (int k = n; k >= 0; --k) {
    r += Real(binomial(n, k)) * to_real(B[k]) * xp;
    xp *= x;
  }
  return r;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Exact real part of g^(k)(u) at rational u in [-1, 1]: -B_k(|u|) sign(u)^k / (2 k!).
inline Rational propagator_real_exact(int k, const Rational& u) {
  const Rational au = u < 0 ? Rational(-u) : u;
  Rational r = -bernoulli_polynomial(k, au) / (2 * Rational(factorial(k)));
  if (k % 2 == 1) r *= (u > 0 ? 1 : u < 0 ? -1 : 0);
  return r;
}

/// Truncated Fourier series of the propagator g^(k)(u) = sum e^{2 pi i n u} / (2 pi i n)^k.
struct PropagatorValue {
  Real real = 0;
  Real imag = 0;
  Real bound = 0;            // tail bound on |truncated - exact| (each component)
  Real bernoulli_real = 0;   // closed-form real part
};

inline PropagatorValue eval_propagator(int k, const Real& u, long long N) {
  if (k < 2) throw std::domain_error("propagator order k < 2 is distributional; unsupported");
  if (u <= -1 || u >= 1) throw std::domain_error("propagator argument must lie in (-1, 1)");
  using boost::multiprecision::cos;
  using boost::multiprecision::pow;
  using boost::multiprecision::sin;
  const Real theta = 2 * pi() * u;
  const Real c = cos(theta), s = sin(theta);
  Real zr = 1, zi = 0, sr = 0, si = 0;
  for (long long n = 1; n <= N; ++n) {
    const Real nr = zr * c - zi * s;
    zi = zr * s + zi * c;
    zr = nr;
    const Real w = 1 / pow(Real(n), k);
    sr += zr * w;
    si += zi * w;
  }
  // multiply by (-i)^k / (2 pi)^k
  Real rr = sr, ri = si;
  for (int e = 0; e < k % 4; ++e) {
    const Real t = rr;
    rr = ri;
    ri = -t;
  }
  const Real scale = pow(2 * pi(), k);
  PropagatorValue out;
  out.real = rr / scale;
  out.imag = ri / scale;
  out.bound = pow(Real(N), 1 - k) / (Real(k - 1) * scale) + rounding_unit() * Real(N) * 8;
  const Real au = boost::multiprecision::abs(u);
  out.bernoulli_real = -bernoulli_polynomial(k, au) / (2 * to_real(Rational(factorial(k))));
  if (k % 2 == 1) out.bernoulli_real *= (u > 0 ? 1 : u < 0 ? -1 : 0);
  return out;
}

/// Coefficients of lambda^n in ln Z(0, lambda): zeta(n)/n for n = 1..nmax.
/// The n = 1 entry is the divergent zeta(1) and comes out regularized.
inline std::vector<ZetaCombination> lnz_coefficients(int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
  std::vector<ZetaCombination> out;
  for (int n = 1; n <= nmax; ++n) out.push_back(zeta({n}, Rational(1, n)));
  return out;
}

}  // namespace mzv
