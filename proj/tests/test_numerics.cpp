#include "mzv/numerics.hpp"

#include <gtest/gtest.h>

#include <boost/math/special_functions/polygamma.hpp>

using namespace mzv;

namespace {

// Reference values from an independent mpmath computation (Hurwitz-zeta
// and digamma series for depth two, closed forms elsewhere).
const std::vector<std::pair<Parts, const char*>> kReference = {
    {{2}, "1.64493406684822643647241516665"},
    {{2, 1}, "1.20205690315959428539973816151"},
    {{3, 1}, "0.270580808427784547879000924135"},
    {{2, 2}, "0.811742425283353643637002772406"},
    {{3, 2}, "0.228810397603353759768746148942"},
    {{2, 3}, "0.711566197550572432096973806086"},
    {{4, 1}, "0.0965511599894437344656455314289"},
    {{5, 1}, "0.0405368972715197378290459079397"},
    {{4, 2}, "0.0884833824543687142943278390858"},
    {{3, 3}, "0.213798868224592547099583574508"},
    {{5, 3}, "0.0377076729848475440113047822937"},
    {{2, 2, 2}, "0.190751824122084213696472111836"},
    {{3, 1, 1}, "0.0965511599894437344656455314289"},
    {{2, 1, 1}, "1.08232323371113819151600369654"},
};

Real R(const char* s) { return Real(s); }

}  // namespace

TEST(Oracle, MatchesReferenceValues) {
  Oracle o;
  for (const auto& [parts, ref] : kReference) {
    const auto v = o.eval_parts(parts, R("1e-25"));
    EXPECT_LE(v.bound, R("1e-25"));
    EXPECT_LT(abs(v.value - R(ref)), R("1e-27")) << format_parts(parts);
  }
}

TEST(Oracle, RejectsDivergentAndOverPreciseRequests) {
  Oracle o;
  EXPECT_THROW(o.eval_parts({1, 2}, R("1e-10")), DivergenceError);
  EXPECT_THROW(o.eval_parts({2}, R("1e-80")), PrecisionError);
  EXPECT_THROW(o.eval_combination(ZetaCombination::product({{1}, {2}}), R("1e-10")), DivergenceError);
}

TEST(Oracle, CombinationValueAndBound) {
  Oracle o;
  const auto c = ZetaCombination::product({{2}, {3}}) - zeta({5});
  const auto v = o.eval_combination(c, R("1e-20"));
  const Real expected = R("0.711566197550572432096973806086") + R("0.228810397603353759768746148942");
  EXPECT_LE(v.bound, R("1e-20"));
  EXPECT_LT(abs(v.value - expected), R("1e-20"));
  EXPECT_EQ(o.eval_combination(ZetaCombination{}, R("1e-10")).value, 0);
}

TEST(Oracle, VerifiesTrueIdentityAndRejectsPerturbed) {
  Oracle o;
  const auto refl = zeta({2, 3}) + zeta({3, 2}) - ZetaCombination::product({{2}, {3}}) + zeta({5});
  const auto good = verify_combination(o, refl, R("1e-20"));
  EXPECT_TRUE(good.pass);
  EXPECT_EQ(good.term_values.size(), 4u);
  const auto bad = verify_combination(o, refl + zeta({5}, Rational(1, 1000000)), R("1e-20"));
  EXPECT_FALSE(bad.pass);
}

TEST(DirectSum, BoundsContainTheLimit) {
  const auto v = eval_mzv_direct(Composition{2, 1}, 100000);
  EXPECT_LT(abs(v.value - R("1.20205690315959428539973816151")), v.bound);
  EXPECT_LT(v.bound, R("1e-3"));
  const auto w = eval_mzv_direct(Composition{3}, 1000);
  EXPECT_LT(abs(w.value - R("1.20205690315959428539973816151")), w.bound);
}

TEST(DirectSum, AlternatingSum) {
  // sum_{n>m} (-1)^m / (n^2 m), mpmath reference via Hurwitz zeta
  const auto v = eval_mzv_direct(parse_composition("2,-1"), 1000000);
  EXPECT_LT(abs(v.value - R("-0.508215212804684850812131626977")), v.bound + R("1e-12"));
}

TEST(Propagator, ExactRealParts) {
  EXPECT_EQ(propagator_real_exact(2, 0), Rational(-1, 24));
  EXPECT_EQ(propagator_real_exact(4, 0), Rational(1, 1440));
  EXPECT_EQ(propagator_real_exact(2, Rational(1, 3)), Rational(1, 72));
  EXPECT_EQ(propagator_real_exact(4, Rational(1, 4)), Rational(-7, 184320));
  EXPECT_EQ(propagator_real_exact(3, Rational(1, 4)), -propagator_real_exact(3, Rational(-1, 4)));
}

TEST(Propagator, FourierSeriesConvergesToBernoulli) {
  for (int k : {2, 3, 4}) {
    const auto v = eval_propagator(k, R("0.3"), 20000);
    EXPECT_LT(abs(v.real - v.bernoulli_real), v.bound) << k;
  }
  EXPECT_THROW(eval_propagator(1, R("0.3"), 10), std::domain_error);
  EXPECT_THROW(eval_propagator(2, R("1.5"), 10), std::domain_error);
}

TEST(Propagator, BernoulliPolynomials) {
  EXPECT_EQ(bernoulli_polynomial(2, Rational(0)), Rational(1, 6));
  EXPECT_EQ(bernoulli_polynomial(3, Rational(1, 2)), 0);
  EXPECT_EQ(bernoulli_polynomial(1, Rational(1)), Rational(1, 2));
}

TEST(FreeEnergy, CoefficientsAreZetaOverN) {
  const auto c = lnz_coefficients(8);
  ASSERT_EQ(c.size(), 8u);
  EXPECT_TRUE(c[0].regularized());
  Oracle o;
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(c[n - 1], zeta({n}, Rational(1, n)));
    // d^n/dλ^n ln Γ(1-λ) at 0 is (-1)^n ψ^(n-1)(1)
    const double taylor = (n % 2 == 0 ? 1 : -1) * boost::math::polygamma(n - 1, 1.0) / std::tgamma(n + 1.0);
    const double value = static_cast<double>(o.eval_combination(c[n - 1], R("1e-15")).value);
    EXPECT_NEAR(value, taylor, 1e-12) << n;
  }
}

TEST(Precision, WorkingDigitsFromEnvironment) {
  ::setenv("MZV_PRECISION_DIGITS", "35", 1);
  EXPECT_EQ(working_digits(), 35);
  ::setenv("MZV_PRECISION_DIGITS", "5", 1);
  EXPECT_EQ(working_digits(), 30);
  ::unsetenv("MZV_PRECISION_DIGITS");
  EXPECT_EQ(working_digits(), 50);
}
