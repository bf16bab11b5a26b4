#include <gtest/gtest.h>

#include "arith/error.hpp"
#include "arith/integer.hpp"
#include "arith/matrix.hpp"

using namespace arith;

TEST(Integer, Decimal) {
  EXPECT_EQ(to_decimal(ExactRational(78157, 600), 10), "130.2616666667");
  EXPECT_EQ(to_decimal(ExactRational(-1, 3), 3), "-0.333");
  EXPECT_EQ(to_decimal(ExactRational(-2, 3), 3), "-0.667");
  EXPECT_EQ(to_decimal(ExactRational(1, 2), 0), "1");
  EXPECT_EQ(to_decimal(ExactRational(7, 2), 2), "3.50");
}

TEST(Integer, Fractions) {
  EXPECT_EQ(to_fraction_string(ExactRational(6, 4)), "3/2");
  EXPECT_EQ(to_fraction_string(ExactRational(-5)), "-5");
  EXPECT_EQ(gcd(BigInt(12), BigInt(-18)), 6);
}

TEST(Integer, Narrowing) {
  EXPECT_EQ(to_u64(BigInt(42)), 42u);
  EXPECT_THROW(to_u64(BigInt(1) << 64), RangeError);
  EXPECT_THROW(to_u64(BigInt(-1)), RangeError);
}

TEST(Matrix, Operations) {
  IntMatrix m{{1, 2}, {3, 4}};
  m.add_row_multiple(1, 0, -3);
  EXPECT_EQ(m, (IntMatrix{{1, 2}, {0, -2}}));
  m.add_col_multiple(1, 0, -2);
  EXPECT_EQ(m, (IntMatrix{{1, 0}, {0, -2}}));
  m.negate_row(1);
  m.swap_rows(0, 1);
  m.swap_cols(0, 1);
  EXPECT_EQ(m, (IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(m.multiply({3, 5}), (std::vector<BigInt>{6, 5}));
  EXPECT_EQ(IntMatrix({{1, 2}, {3, 4}}) * IntMatrix::identity(2), IntMatrix({{1, 2}, {3, 4}}));
}

TEST(Matrix, Determinant) {
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, -2}, {-2, 2}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{0, 2, 1}, {3, 0, 1}, {1, 1, 0}}), 5);
  EXPECT_EQ(determinant(IntMatrix::identity(5)), 1);
}
