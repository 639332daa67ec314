#include "mzv/linalg.hpp"
#include "mzv/numerics.hpp"

#include <gtest/gtest.h>

using namespace mzv;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  ExactMatrix m(0, rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace

TEST(ExactMatrix, RankOfSmallMatrices) {
  EXPECT_EQ(rank(from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(from_rows({{1, 2}, {3, 4}})), 2u);
  EXPECT_EQ(rank(from_rows({{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(rank(from_rows({{Rational(1, 3), 1, 0}, {1, 3, 0}, {0, 0, 5}})), 2u);
}

TEST(ExactMatrix, ReducedRowEchelonForm) {
  auto m = from_rows({{2, 4, 6}, {1, 3, 5}});
  const auto pivots = rref(m);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(m(0, 1), 0);
  EXPECT_EQ(m(0, 2), -1);
  EXPECT_EQ(m(1, 2), 2);
}

TEST(PermutationSystem, GenericRanks) {
  EXPECT_EQ(rank(assemble_permutation_system(2).matrix), 1u);
  EXPECT_EQ(rank(assemble_permutation_system(3).matrix), 4u);
  EXPECT_EQ(rank(assemble_permutation_system(4).matrix), 18u);
}

TEST(PermutationSystem, DegenerateRanks) {
  EXPECT_EQ(parse_degeneracy("abb"), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(rank(assemble_permutation_system(parse_degeneracy("abb")).matrix), 2u);
  EXPECT_EQ(rank(assemble_permutation_system(parse_degeneracy("aaa")).matrix), 1u);
  EXPECT_EQ(assemble_permutation_system(parse_degeneracy("aaa")).unknowns.size(), 1u);
  EXPECT_THROW(parse_degeneracy("a"), std::invalid_argument);
}

TEST(PermutationSystem, ThreePointRowsDoNotRaiseRank) {
  const auto plain = assemble_permutation_system(3, false);
  const auto with = assemble_permutation_system(3, true);
  EXPECT_GT(with.matrix.rows(), plain.matrix.rows());
  EXPECT_EQ(rank(with.matrix), rank(plain.matrix));
}

TEST(PermutationSystem, RowsInstantiateToTrueIdentities) {
  Oracle o;
  const auto sys = assemble_permutation_system(3, true);
  for (const auto& row : sys.rows) {
    const auto z = instantiate(row, {2, 3, 4});
    EXPECT_TRUE(verify_combination(o, z, Real("1e-20")).pass) << format_combination(row);
  }
}

TEST(Basis, FixedFirstArgumentBasisSpans) {
  for (int l = 2; l <= 4; ++l) {
    const auto rep = reduce_to_basis(l);
    std::size_t fact = 1;
    for (int i = 2; i < l; ++i) fact *= i;
    EXPECT_EQ(rep.basis.size(), fact);
    EXPECT_EQ(rep.rank, fact * l - fact);
    EXPECT_TRUE(rep.canonical);
    EXPECT_EQ(rep.expressions.size(), rep.unknowns - rep.basis.size());
  }
  EXPECT_THROW(reduce_to_basis(6), std::invalid_argument);
}

TEST(Basis, ExpressionsHoldNumerically) {
  Oracle o;
  const auto rep = reduce_to_basis(3);
  for (const auto& [u, e] : rep.expressions) {
    SymbolCombination id = e;
    id.add({u}, -1);
    EXPECT_TRUE(verify_combination(o, instantiate(id, {2, 3, 5}), Real("1e-20")).pass);
    EXPECT_TRUE(verify_combination(o, instantiate(id, {4, 2, 3}), Real("1e-20")).pass);
  }
}

TEST(Symbols, Formatting) {
  const SymbolSum ab(std::vector<int>{0, 1});
  EXPECT_EQ(format_symbol_sum(ab), "a+b");
  EXPECT_EQ(format_symbol_parts({SymbolSum(0), ab}), "ζ(a,a+b)");
}
