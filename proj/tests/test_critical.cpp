#include <gtest/gtest.h>

#include "arith/critical.hpp"
#include "arith/error.hpp"

using namespace arith;

namespace {

ArithStructure st(std::vector<BigInt> a, std::vector<BigInt> b) {
  return ArithStructure::from_labels({std::move(a), std::move(b)});
}

}  // namespace

TEST(CriticalOrder, Examples) {
  EXPECT_EQ(critical_order(st({6, 4, 2}, {13, 1})), 1);
  EXPECT_EQ(critical_order(st({1}, {5, 8, 3, 1, 1})), 2);
  EXPECT_EQ(critical_order(st({1}, {1})), 2);
}

TEST(Snf, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)), (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 4}}), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, -2}, {-2, 2}}), (std::vector<BigInt>{2, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{4, 0}, {0, 6}}), (std::vector<BigInt>{2, 12}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}), (std::vector<BigInt>{0, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{-3}}), (std::vector<BigInt>{3}));
}

TEST(Snf, NonSquare) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}};
  const auto dec = smith_decomposition(m);
  EXPECT_EQ(dec.left * m * dec.right, dec.diagonal);
  EXPECT_EQ(smith_normal_form(m), (std::vector<BigInt>{2, 6}));
}

TEST(Snf, DecompositionReconstructs) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto dec = smith_decomposition(m);
  EXPECT_EQ(dec.left * m * dec.right, dec.diagonal);
  EXPECT_EQ(abs(determinant(dec.left)), 1);
  EXPECT_EQ(abs(determinant(dec.right)), 1);
  EXPECT_EQ(smith_normal_form(m), (std::vector<BigInt>{2, 6, 12}));
}

TEST(CriticalGroup, Examples) {
  const auto sample = critical_group(st({6, 4, 2}, {13, 1}));
  EXPECT_EQ(sample.order, 1);
  EXPECT_EQ(sample.type, GroupType::Trivial);
  EXPECT_EQ(sample.snf.back(), 0);
  const auto unit = critical_group(st({1}, {1}));
  EXPECT_EQ(unit.order, 2);
  EXPECT_EQ(unit.type, GroupType::Z2);
  EXPECT_EQ(unit.snf, (std::vector<BigInt>{2, 0}));
  EXPECT_EQ(critical_group(st({1}, {5, 3, 1})).type, GroupType::Z2);
  EXPECT_STREQ(to_string(GroupType::Z2), "Z/2Z");
  EXPECT_STREQ(to_string(GroupType::Trivial), "trivial");
}
