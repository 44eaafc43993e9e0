#include <gtest/gtest.h>

#include "slodowy/exact/scalar.hpp"

using slodowy::exact::Scalar;

TEST(Scalar, Sqrt2SquaresToTwo) { EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2)); }

TEST(Scalar, InverseTimesSelfIsOne) {
  Scalar a(mpq_class(3, 7), mpq_class(-2, 5));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(a * a.conjugate(), Scalar(mpq_class(9, 49) - 2 * mpq_class(4, 25)));
}

TEST(Scalar, FractionsCanonicalize) {
  EXPECT_EQ(Scalar::fraction(6, -4), Scalar::fraction(-3, 2));
  EXPECT_EQ(Scalar::fraction(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Scalar(4).to_string(), "4");
}

TEST(Scalar, InverseOfZeroThrows) { EXPECT_ANY_THROW(Scalar(0).inverse()); }

TEST(Scalar, IrrationalText) {
  Scalar a(mpq_class(1, 2), mpq_class(-3));
  EXPECT_FALSE(a.is_rational());
  EXPECT_NE(a.to_string().find("sqrt2"), std::string::npos);
}
