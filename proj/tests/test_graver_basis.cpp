#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graver/circuits.hpp"
#include "graver/graver_basis.hpp"
#include "graver/nfold.hpp"
#include "graver/oracle.hpp"
#include "test_support.hpp"

namespace graver {
namespace {

using testing::as_set;
using testing::in_kernel;
using testing::vec;

void expect_graver_invariants(const GraverBasis& g) {
  for (const auto& x : g.elements()) {
    EXPECT_FALSE(x.is_zero());
    EXPECT_TRUE(in_kernel(g.matrix(), x));
    EXPECT_TRUE(g.contains(-x));
    for (const auto& y : g.elements()) {
      if (!(x == y)) {
        EXPECT_FALSE(conforms(y, x));
      }
    }
  }
}

TEST(GraverBasis, OnesPair) {
  const auto g = graver_basis(IntMatrix::from_rows({{1, 1}}));
  EXPECT_EQ(g.elements(), (std::vector<LatticeVector>{vec({-1, 1}), vec({1, -1})}));
}

TEST(GraverBasis, OneTwo) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}});
  const auto brute = oracle::brute_force_graver(a, 4);
  ASSERT_TRUE(brute.conclusive);
  ASSERT_EQ(brute.elements, (std::vector<LatticeVector>{vec({-2, 1}), vec({2, -1})}));
  EXPECT_EQ(graver_basis(a).elements(), brute.elements);
}

TEST(GraverBasis, AllOnesTriple) {
  const IntMatrix a = IntMatrix::from_rows({{1, 1, 1}});
  const auto brute = oracle::brute_force_graver(a, 2);
  ASSERT_TRUE(brute.conclusive);
  const std::set<LatticeVector> expected = {vec({1, -1, 0}),  vec({-1, 1, 0}), vec({1, 0, -1}),
                                            vec({-1, 0, 1}),  vec({0, 1, -1}), vec({0, -1, 1})};
  ASSERT_EQ(as_set(brute.elements), expected);
  EXPECT_EQ(as_set(graver_basis(a).elements()), expected);
}

TEST(GraverBasis, IndependentColumnsGiveEmptyBasis) {
  EXPECT_TRUE(graver_basis(IntMatrix::identity(3)).empty());
  EXPECT_TRUE(graver_basis(IntMatrix::from_rows({{1, 0}, {1, 1}})).empty());
}

TEST(GraverBasis, NoRowsGivesUnitVectors) {
  const auto g = graver_basis(IntMatrix(0, 2));
  EXPECT_EQ(as_set(g.elements()),
            (std::set<LatticeVector>{vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}));
}

TEST(GraverBasis, ReachesElementsOutsideTheRationalKernelSpan) {
  // (0,1,-1) is not an integer combination of the free-column kernel vectors.
  const auto g = graver_basis(IntMatrix::from_rows({{2, 1, 1}}));
  EXPECT_TRUE(g.contains(vec({0, 1, -1})));
  EXPECT_EQ(g.elements(), oracle::brute_force_graver(g.matrix(), 4).elements);
}

TEST(GraverBasis, FallsBackToArbitraryPrecision) {
  const BigInt big = pow2(62);
  IntMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = big;
  const auto g = graver_basis(a);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.contains(LatticeVector({big, BigInt(-1)})));
}

TEST(GraverBasis, InvariantsOnRandomMatrices) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t s = 1 + rng() % 2;
    const std::size_t t = 2 + rng() % 3;
    expect_graver_invariants(graver_basis(testing::random_matrix(rng, s, t, -3, 3)));
  }
}

TEST(GraverBasis, EquivariantUnderColumnPermutation) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, 2, 4, -2, 2);
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto g = graver_basis(a);
    const auto gp = graver_basis(a.select_columns(perm));
    std::set<LatticeVector> mapped;
    for (const auto& x : g.elements()) {
      std::vector<BigInt> y(4);
      for (std::size_t j = 0; j < 4; ++j) y[j] = x[perm[j]];
      mapped.insert(LatticeVector(std::move(y)));
    }
    EXPECT_EQ(mapped, as_set(gp.elements()));
  }
}

TEST(GraverBasis, EqualsCircuitsForSmallBipartiteIncidence) {
  for (std::size_t n : {2u, 3u}) {
    const IntMatrix a = nfold_product(IntMatrix::from_rows({{1, 1, 1}}), n);
    EXPECT_EQ(graver_basis(a).elements(), oracle::brute_force_circuits(a)) << "n=" << n;
  }
}

TEST(GraverBasis, SignRepresentatives) {
  const auto g = graver_basis(IntMatrix::from_rows({{1, 1, 1}}));
  const auto reps = g.sign_representatives();
  EXPECT_EQ(reps.size(), 3u);
  for (const auto& r : reps) EXPECT_TRUE(g.contains(-r));
}

}  // namespace
}  // namespace graver
