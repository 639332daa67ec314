#include "mzv/combination.hpp"
#include "mzv/composition.hpp"
#include "mzv/rational.hpp"
#include "mzv/stuffle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mzv;

namespace {

// Nested sum over N >= n1 > n2 > ... > nm >= 1 in long double.
long double truncated_sum(const Parts& ks, int N) {
  std::vector<long double> inner(N + 2, 1.0L);
  for (int j = static_cast<int>(ks.size()) - 1; j >= 0; --j) {
    std::vector<long double> next(N + 2, 0.0L);
    long double acc = 0;
    for (int n = 1; n <= N + 1; ++n) {
      next[n] = acc;
      if (n <= N) acc += inner[n] / std::pow(static_cast<long double>(n), ks[j]);
    }
    inner = std::move(next);
  }
  return inner[N + 1];
}

long double truncated_value(const ZetaCombination& c, int N) {
  long double total = 0;
  for (const auto& t : c.terms()) {
    long double v = t.coefficient.convert_to<long double>();
    for (const auto& f : t.factors) v *= truncated_sum(f, N);
    total += v;
  }
  return total;
}

}  // namespace

TEST(Composition, ProfileOfSmallCompositions) {
  EXPECT_EQ(profile(Composition{2, 1}), (Profile{3, 2, true}));
  EXPECT_EQ(profile(Composition{1}), (Profile{1, 1, false}));
  EXPECT_EQ(profile(Composition{3, 2}), (Profile{5, 2, true}));
}

TEST(Composition, RejectsMalformedParts) {
  EXPECT_THROW(Composition(Parts{}), CompositionError);
  EXPECT_THROW(Composition(Parts{2, 0}), CompositionError);
  EXPECT_THROW(parse_composition("2,,1"), CompositionError);
  EXPECT_THROW(parse_composition("x"), CompositionError);
}

TEST(Composition, ParsesAndFormatsSignedParts) {
  const auto c = parse_composition("2,-1");
  EXPECT_EQ(c.parts(), (Parts{2, 1}));
  EXPECT_EQ(c.signs(), (std::vector<std::int8_t>{1, -1}));
  EXPECT_EQ(format_composition(c), "2,-1");
  EXPECT_EQ(format_composition(parse_composition("3,1")), "3,1");
}

TEST(Composition, WordRoundTrip) {
  EXPECT_EQ(to_word(Composition{2, 1}), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(to_word(Composition{3}), (std::vector<int>{0, 0, 1}));
  const std::vector<int> w{0, 1, 0, 1};
  EXPECT_EQ(from_word(w), (Composition{2, 2}));
  for (const auto& p : admissible_compositions(7)) {
    const Composition c(p);
    const auto word = to_word(c);
    EXPECT_EQ(static_cast<int>(word.size()), c.weight());
    EXPECT_EQ(from_word(word), c);
  }
  EXPECT_THROW(to_word(Composition{1, 2}), CompositionError);
}

TEST(Composition, EnumeratesByWeight) {
  EXPECT_EQ(compositions_of_weight(4).size(), 8u);
  // admissible weight-w compositions number 2^(w-2)
  std::size_t expected = 0;
  for (int w = 2; w <= 6; ++w) expected += std::size_t{1} << (w - 2);
  EXPECT_EQ(admissible_compositions(6).size(), expected);
}

TEST(Rational, FractionRoundTrip) {
  EXPECT_EQ(parse_fraction("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_fraction_string(Rational(4)), "4/1");
  EXPECT_EQ(to_fraction_string(Rational(-1, 2)), "-1/2");
  EXPECT_THROW(parse_fraction("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_fraction("1.5"), std::invalid_argument);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Combination, MergesLikeTerms) {
  EXPECT_EQ(zeta({3}) + zeta({3}), zeta({3}, 2));
  const auto c = ZetaCombination::product({{2}, {3}}) - ZetaCombination::product({{3}, {2}});
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(zeta({5}, 0) + zeta({4}), zeta({4}));
}

TEST(Combination, NormalizeIsIdempotent) {
  std::vector<ProductTerm> terms{{{{3}, {2}}, 1}, {{{2}, {3}}, 2}, {{{5}}, Rational(1, 3)}, {{{5}}, Rational(-1, 3)}};
  const auto n = normalize(terms);
  EXPECT_EQ(n.size(), 1u);
  EXPECT_EQ(n.coefficient({{2}, {3}}), 3);
  EXPECT_EQ(normalize(n.terms()), n);
}

TEST(Combination, WeightAndRegularizedFlags) {
  EXPECT_EQ(stuffle(Composition{2}, Composition{3}).weight(), 5);
  EXPECT_FALSE((zeta({2}) + zeta({3})).weight().has_value());
  EXPECT_TRUE(ZetaCombination::product({{1}, {2}}).regularized());
  EXPECT_FALSE(zeta({2, 1}).regularized());
}

TEST(Combination, Formatting) {
  EXPECT_EQ(format_combination(ZetaCombination{}), "0");
  const auto c = zeta({2, 2}, 2) + zeta({4}) - ZetaCombination::product({{2}, {2}});
  EXPECT_EQ(format_combination(c), "ζ(4) + 2*ζ(2,2) - ζ(2)*ζ(2)");
}

TEST(Interleavings, CountsAreMultinomial) {
  EXPECT_EQ(interleavings(1, 1, 0).size(), 2u);
  EXPECT_EQ(interleavings(1, 1, 1).size(), 6u);
  EXPECT_EQ(interleavings(0, 0, 1).size(), 1u);
  EXPECT_EQ(interleavings(2, 2, 1).size(), 30u);
  EXPECT_EQ(interleavings(0, 0, 0).size(), 1u);
}

TEST(Rho, ConsumesPartsAlongPattern) {
  const InterleavingPattern p{Slot::Left, Slot::Both, Slot::Right};
  EXPECT_EQ(rho(Composition{1, 2}, Composition{3, 4}, p), (Composition{1, 5, 4}));
  EXPECT_EQ(rho(Composition{2}, Composition{3}, {Slot::Left, Slot::Right}), (Composition{2, 3}));
  EXPECT_EQ(rho(Composition{2}, Composition{3}, {Slot::Both}), (Composition{5}));
  EXPECT_THROW(rho(Composition{2}, Composition{3}, {Slot::Left}), ShapeError);
}

TEST(Stuffle, DepthOneProducts) {
  EXPECT_EQ(stuffle(Composition{2}, Composition{2}), zeta({2, 2}, 2) + zeta({4}));
  const auto ab = stuffle(Composition{2}, Composition{5});
  EXPECT_EQ(ab, zeta({2, 5}) + zeta({5, 2}) + zeta({7}));
  EXPECT_EQ(ab.size(), 3u);
}

TEST(Stuffle, CommutativeAndHomogeneous) {
  const auto comps = compositions_of_weight(1);
  for (int w = 1; w <= 8; ++w)
    for (int wl = 1; wl < w; ++wl)
      for (const auto& l : compositions_of_weight(wl))
        for (const auto& r : compositions_of_weight(w - wl)) {
          const auto s = stuffle(l, r);
          ASSERT_EQ(s, stuffle(r, l));
          ASSERT_EQ(s.weight(), w);
          std::size_t max_depth = 0;
          for (const auto& t : s.terms()) max_depth = std::max(max_depth, t.factors.front().size());
          ASSERT_EQ(max_depth, l.size() + r.size());
        }
}

TEST(Stuffle, AssociativeOnCombinations) {
  for (const auto& a : admissible_compositions(4))
    for (const auto& b : admissible_compositions(4))
      for (const auto& c : admissible_compositions(6)) {
        if (weight_of(a) + weight_of(b) + weight_of(c) > 6) continue;
        const auto left = stuffle(stuffle(a, b), zeta(c));
        const auto right = stuffle(zeta(a), stuffle(b, c));
        ASSERT_EQ(left, right) << format_parts(a) << " " << format_parts(b) << " " << format_parts(c);
      }
}

TEST(Stuffle, MatchesReorderedTruncatedSums) {
  // With every index capped at N the stuffle holds exactly for the truncated sums.
  const int N = 200;
  const std::vector<std::pair<Parts, Parts>> cases{{{2}, {2, 1}}, {{3, 1}, {2}}, {{2, 1}, {2, 2}}, {{1}, {1, 1}}};
  for (const auto& [l, r] : cases) {
    const long double lhs = truncated_sum(l, N) * truncated_sum(r, N);
    const long double rhs = truncated_value(stuffle(l, r), N);
    EXPECT_NEAR(static_cast<double>(lhs), static_cast<double>(rhs), 1e-15);
  }
}
