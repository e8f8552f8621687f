#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "graver/graver_basis.hpp"
#include "graver/nfold.hpp"
#include "graver/oracle.hpp"
#include "test_support.hpp"

namespace graver {
namespace {

using testing::vec;

TEST(BruteForceGraver, OnesPair) {
  const auto r = oracle::brute_force_graver(IntMatrix::from_rows({{1, 1}}), 3);
  EXPECT_TRUE(r.conclusive);
  EXPECT_EQ(r.elements, (std::vector<LatticeVector>{vec({-1, 1}), vec({1, -1})}));
}

TEST(BruteForceGraver, AllOnesTripleFixture) {
  const auto r = oracle::brute_force_graver(IntMatrix::from_rows({{1, 1, 1}}), 2);
  EXPECT_TRUE(r.conclusive);
  EXPECT_EQ(r.elements, (std::vector<LatticeVector>{vec({-1, 0, 1}), vec({-1, 1, 0}),
                                                    vec({0, -1, 1}), vec({0, 1, -1}),
                                                    vec({1, -1, 0}), vec({1, 0, -1})}));
}

TEST(BruteForceGraver, OneTwoThreeMatchesEngine) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2, 3}});
  const auto r = oracle::brute_force_graver(a, 4);
  ASSERT_TRUE(r.conclusive);
  EXPECT_EQ(r.elements, graver_basis(a).elements());
  EXPECT_EQ(r.elements.size(), 10u);
}

TEST(BruteForceGraver, FlagsBoxBoundary) {
  // (3,-1) reaches |x| = 3 = box.
  EXPECT_FALSE(oracle::brute_force_graver(IntMatrix::from_rows({{1, 3}}), 3).conclusive);
  EXPECT_TRUE(oracle::brute_force_graver(IntMatrix::from_rows({{1, 3}}), 4).conclusive);
}

TEST(BruteForceGraver, Guard) {
  EXPECT_THROW(oracle::brute_force_graver(IntMatrix(1, 10), 5, 1000), TooLarge);
  EXPECT_THROW(oracle::brute_force_graver(IntMatrix(1, 2), 0), error);
}

TEST(BruteForceGraver, GuardFromEnvironment) {
  ::setenv("GRAVER_MAX_POINTS", "100", 1);
  EXPECT_EQ(oracle::max_points_from_env(), 100u);
  EXPECT_THROW(oracle::brute_force_graver(IntMatrix::from_rows({{1, 1, 1}}), 2), TooLarge);
  ::setenv("GRAVER_MAX_POINTS", "junk", 1);
  EXPECT_EQ(oracle::max_points_from_env(), oracle::kDefaultMaxPoints);
  ::unsetenv("GRAVER_MAX_POINTS");
  EXPECT_EQ(oracle::max_points_from_env(), oracle::kDefaultMaxPoints);
}

TEST(BruteForceCircuits, K32) {
  const auto cs = oracle::brute_force_circuits(nfold_product(IntMatrix::from_rows({{1, 1, 1}}), 2));
  EXPECT_EQ(cs.size(), 6u);
}

TEST(BruteForceCircuits, K33) {
  EXPECT_EQ(oracle::brute_force_circuits(testing::k33_matrix()).size(), 30u);
}

TEST(BruteForceCircuits, IdentityAndGuard) {
  EXPECT_TRUE(oracle::brute_force_circuits(IntMatrix::identity(4)).empty());
  EXPECT_THROW(oracle::brute_force_circuits(IntMatrix(1, 13)), TooLarge);
}

TEST(Oracles, CircuitsWithinBruteForceGraver) {
  std::mt19937 rng(37);
  int conclusive = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t s = 1 + rng() % 2;
    const std::size_t t = 2 + rng() % 3;
    const IntMatrix a = testing::random_matrix(rng, s, t, -3, 3);
    const auto g = oracle::brute_force_graver(a, 5);
    if (!g.conclusive) continue;
    ++conclusive;
    for (const auto& c : oracle::brute_force_circuits(a)) {
      EXPECT_TRUE(std::binary_search(g.elements.begin(), g.elements.end(), c));
    }
  }
  EXPECT_GT(conclusive, 20);
}

TEST(Oracles, EngineAgreesOnRandomSmallMatrices) {
  std::mt19937 rng(43);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t s = 1 + rng() % 3;
    const std::size_t t = 2 + rng() % 3;
    const IntMatrix a = testing::random_matrix(rng, s, t, -3, 3);
    const auto brute = oracle::brute_force_graver(a, 5);
    if (!brute.conclusive) continue;
    ++compared;
    EXPECT_EQ(graver_basis(a).elements(), brute.elements) << "trial " << trial;
  }
  EXPECT_GT(compared, 15);
}

}  // namespace
}  // namespace graver
