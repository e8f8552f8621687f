#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graver/complexity.hpp"
#include "graver/nfold.hpp"
#include "graver/oracle.hpp"
#include "test_support.hpp"

namespace graver {
namespace {

std::size_t max_type(const GraverBasis& g, std::size_t t) {
  std::size_t best = 0;
  for (const auto& x : g.elements()) best = std::max(best, type_of(x.with_block_width(t)));
  return best;
}

TEST(GraverComplexity, IndependentColumns) {
  for (std::size_t n : {1u, 2u, 4u}) EXPECT_EQ(graver_complexity(IntMatrix::identity(n)), 0);
  const auto brute = oracle::brute_force_graver(IntMatrix::identity(3), 2);
  EXPECT_TRUE(brute.elements.empty());
}

TEST(GraverComplexity, OnesPair) {
  const IntMatrix a = IntMatrix::from_rows({{1, 1}});
  // Oracle: the columns of G are ±(1,-1); enumerate its Graver basis.
  const IntMatrix g = IntMatrix::from_rows({{-1, 1}, {1, -1}});
  ASSERT_EQ(graver_column_matrix(graver_basis(a)), g);
  const auto brute = oracle::brute_force_graver(g, 3);
  ASSERT_TRUE(brute.conclusive);
  BigInt best = 0;
  for (const auto& x : brute.elements) best = std::max(best, x.l1_norm());
  ASSERT_EQ(best, 2);
  EXPECT_EQ(graver_complexity(a), 2);
  EXPECT_EQ(graver_complexity_full(a), 2);
}

TEST(GraverComplexity, AllOnesTriple) {
  const IntMatrix a = IntMatrix::from_rows({{1, 1, 1}});
  // Oracle: largest type in the Graver bases of the n-fold products.
  EXPECT_EQ(max_type(graver_basis(nfold_product(a, 3)), 3), 3u);
  EXPECT_EQ(max_type(graver_basis(nfold_product(a, 4)), 3), 3u);
  EXPECT_EQ(graver_complexity(a), 3);
}

TEST(GraverComplexity, TypesOfOnesPairProductsStayWithinTwo) {
  const IntMatrix a = IntMatrix::from_rows({{1, 1}});
  const BigInt g = graver_complexity(a);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto basis = graver_basis(nfold_product(a, n));
    EXPECT_LE(BigInt(max_type(basis, 2)), g) << "n=" << n;
    if (n >= 2) {
      EXPECT_EQ(max_type(basis, 2), 2u);
    }
  }
}

TEST(GraverComplexity, ReducedRouteMatchesFullColumnMatrix) {
  for (const auto& a : {IntMatrix::from_rows({{1, 1}}), IntMatrix::from_rows({{1, 2}}),
                        IntMatrix::from_rows({{1, 1, 1}}), IntMatrix::from_rows({{1, 1, 2}}),
                        IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}),
                        IntMatrix::from_rows({{1, 0}})}) {
    EXPECT_EQ(graver_complexity(a), graver_complexity_full(a));
  }
}

TEST(GraverComplexity, InvariantUnderColumnOrderOfG) {
  const GraverBasis basis = graver_basis(IntMatrix::from_rows({{1, 1, 1}}));
  const IntMatrix full = graver_column_matrix(basis);
  const IntMatrix reps = graver_representative_matrix(basis);
  const BigInt expected = max_l1_norm(graver_basis(full));
  ASSERT_EQ(expected, 3);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::size_t> perm(full.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(max_l1_norm(graver_basis(full.select_columns(perm))), expected);
    std::vector<std::size_t> rperm(reps.cols());
    std::iota(rperm.begin(), rperm.end(), 0);
    std::shuffle(rperm.begin(), rperm.end(), rng);
    EXPECT_EQ(complexity_from_sign_representatives(reps.select_columns(rperm)), expected);
  }
}

TEST(GraverComplexity, SignClosedMatrixStructure) {
  // Graver basis of [R, -R]: the ±(e_i, e_i) pairs plus sign splittings of G(R).
  const IntMatrix r = IntMatrix::from_rows({{1, 2}});
  IntMatrix rr = IntMatrix::from_rows({{1, 2, -1, -2}});
  const auto g = graver_basis(rr);
  EXPECT_TRUE(g.contains(testing::vec({1, 0, 1, 0})));
  EXPECT_TRUE(g.contains(testing::vec({0, 1, 0, 1})));
  BigInt best = 0;
  const auto gr = graver_basis(r);
  for (const auto& x : gr.elements()) best = std::max(best, x.l1_norm());
  EXPECT_EQ(max_l1_norm(g), std::max(BigInt(2), best));
}

}  // namespace
}  // namespace graver
