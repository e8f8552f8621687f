#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "graver/lattice_vector.hpp"
#include "test_support.hpp"

namespace graver {
namespace {

using testing::vec;

TEST(Conforms, Examples) {
  EXPECT_TRUE(conforms(vec({1, 0, -1}), vec({2, 0, -1})));
  EXPECT_FALSE(conforms(vec({1, 0}), vec({-1, 0})));
  EXPECT_TRUE(conforms(vec({3, -2, 0, 5}), vec({3, -2, 0, 5})));
  EXPECT_TRUE(conforms(vec({0, 0}), vec({-4, 1})));
  EXPECT_FALSE(conforms(vec({0, 1}), vec({5, 0})));
}

TEST(Conforms, DimensionMismatch) {
  EXPECT_THROW(conforms(vec({1}), vec({1, 0})), DimensionMismatch);
}

TEST(Conforms, IsAPartialOrder) {
  std::vector<LatticeVector> sample;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -1; c <= 1; ++c) sample.push_back(vec({a, b, c}));
  for (const auto& u : sample) {
    EXPECT_TRUE(conforms(u, u));
    for (const auto& v : sample) {
      if (conforms(u, v) && conforms(v, u)) {
        EXPECT_EQ(u, v);
      }
      if (!conforms(u, v)) continue;
      for (const auto& w : sample) {
        if (conforms(v, w)) {
          EXPECT_TRUE(conforms(u, w));
        }
      }
    }
  }
}

TEST(TypeOf, ZeroVector) {
  EXPECT_EQ(type_of(LatticeVector({0, 0, 0, 0}).with_block_width(2)), 0u);
}

TEST(TypeOf, CountsNonzeroBlocks) {
  EXPECT_EQ(type_of(vec({1, -1, 0, 0, 2, 0}).with_block_width(2)), 2u);
  EXPECT_EQ(type_of(vec({1, -1, 0, 0, 2, 0}).with_block_width(3)), 2u);
  EXPECT_EQ(type_of(vec({1, -1, 0, 0, 2, 0}).with_block_width(1)), 3u);
}

TEST(TypeOf, RequiresBlockWidth) {
  EXPECT_THROW(type_of(vec({1, 2})), BlockWidthUnset);
  EXPECT_THROW(vec({1, 2, 3}).with_block_width(2), DimensionMismatch);
  EXPECT_THROW(vec({1, 2}).with_block_width(0), DimensionMismatch);
}

TEST(LatticeVector, PrimitiveNormalization) {
  EXPECT_EQ(primitive_normalized(vec({0, -4, 6})), vec({0, 2, -3}));
  EXPECT_EQ(primitive_normalized(vec({0, 0})), vec({0, 0}));
}

TEST(LatticeVector, OrderIsLexicographic) {
  EXPECT_LT(vec({-1, 1}), vec({1, -1}));
  EXPECT_LT(vec({0, -1}), vec({0, 1}));
}

}  // namespace
}  // namespace graver
