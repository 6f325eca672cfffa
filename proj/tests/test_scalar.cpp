#include <gtest/gtest.h>

#include "hyclif/random.hpp"
#include "hyclif/scalar.hpp"

using namespace hyclif;

TEST(Scalar, Sqrt2Squares) {
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  EXPECT_EQ(Scalar::inv_sqrt2() * Scalar::sqrt2(), Scalar(1));
}

TEST(Scalar, CanonicalRationals) {
  EXPECT_EQ(Scalar(Rational(4, 6)), Scalar(Rational(2, 3)));
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Scalar, InverseIsExact) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Scalar s = rng.nonzero_scalar();
    ASSERT_EQ(s * s.inverse(), Scalar(1)) << s;
  }
  EXPECT_THROW(Scalar().inverse(), Error);
}

TEST(Scalar, SignOfIrrational) {
  EXPECT_EQ((Scalar::sqrt2() - Scalar(Rational(141, 100))).sign(), 1);
  EXPECT_EQ((Scalar::sqrt2() - Scalar(Rational(142, 100))).sign(), -1);
  EXPECT_EQ(Scalar(Rational(3), Rational(-2)).sign(), 1);   // 3 − 2√2 > 0
  EXPECT_EQ(Scalar(Rational(2), Rational(-2)).sign(), -1);  // 2 − 2√2 < 0
  EXPECT_EQ(Scalar().sign(), 0);
}

TEST(Scalar, FieldAxiomsOnRandomDraws) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a - a, Scalar());
  }
}

TEST(Scalar, Printing) {
  EXPECT_EQ(to_string(Scalar(Rational(-3, 4))), "-3/4");
  EXPECT_EQ(to_string(Scalar::sqrt2()), "r2");
  EXPECT_EQ(to_string(Scalar(Rational(1, 2), Rational(3, 4))), "1/2+3/4 r2");
  EXPECT_EQ(to_string(Scalar(Rational(1), Rational(-1))), "1-r2");
  EXPECT_EQ(to_string(Scalar()), "0");
}
