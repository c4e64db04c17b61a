#include <gtest/gtest.h>

#include "oracle.hpp"
#include "properties.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/exactnum.hpp"

using namespace tiltwall;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(q("4/6").str(), "2/3");
  EXPECT_EQ(q("-10/5").str(), "-2");
  EXPECT_EQ(q("0/7").str(), "0");
  EXPECT_EQ(q("-1/12").denominator(), 12);
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "+1", " 1", "1.5", "1/2/3", "--1", "a"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(q("-7/2").floor(), -4);
  EXPECT_EQ(q("-7/2").ceil(), -3);
  EXPECT_EQ(q("5").floor(), 5);
  EXPECT_EQ(q("5").ceil(), 5);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), Error); }

TEST(QuadraticValue, SignExamples) {
  EXPECT_EQ(qv_sign(qv_from(0, 0, 7)), 0);
  EXPECT_EQ(qv_sign(qv_from(Rational(3, 4), Rational(-1, 12), 69)), 1);
  EXPECT_EQ(qv_sign(qv_from(1, -1, 2)), -1);
}

TEST(QuadraticValue, CompareExamples) {
  EXPECT_EQ(qv_cmp(qv_from(5, 0, 0), qv_from(5, 0, 3)), std::strong_ordering::equal);
  EXPECT_EQ(qv_cmp(qv_from(Rational(-1, 4), Rational(-1, 12), 69), QuadraticValue(-1)),
            std::strong_ordering::greater);
  // 1 - sqrt2 = -0.414.. is below 2 - sqrt5 = -0.236..
  EXPECT_EQ(qv_cmp(qv_from(1, -1, 2), qv_from(2, -1, 5)), std::strong_ordering::less);
  const auto x = qv_from(1, -1, 2), y = qv_from(2, -1, 5);
  EXPECT_LT(oracle::to_dec(x), oracle::to_dec(y));
}

TEST(QuadraticValue, Canonicalization) {
  const auto a = qv_from(0, 1, 4);
  EXPECT_EQ(a.p(), 2);
  EXPECT_TRUE(a.is_rational());
  EXPECT_TRUE(a.d().is_zero());

  const auto b = qv_from(Rational(-1, 4), Rational(-1, 12), 69);
  EXPECT_EQ(b.p(), Rational(-1, 4));
  EXPECT_EQ(b.q(), Rational(-1, 12));
  EXPECT_EQ(b.d(), 69);
  EXPECT_EQ(b.str(), "-1/4 - 1/12*sqrt(69)");

  const auto c = qv_from(1, 2, Rational(9, 4));
  EXPECT_EQ(c.p(), 4);
  EXPECT_TRUE(c.is_rational());

  const auto d = qv_from(0, 1, 12);  // sqrt12 = 2 sqrt3
  EXPECT_EQ(d.q(), 2);
  EXPECT_EQ(d.d(), 3);

  const auto e = qv_from(0, 1, Rational(2, 3));  // sqrt(2/3) = sqrt6 / 3
  EXPECT_EQ(e.q(), Rational(1, 3));
  EXPECT_EQ(e.d(), 6);
}

TEST(QuadraticValue, NegativeRadicand) {
  try {
    qv_from(0, 1, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "NegativeRadicand");
  }
}

TEST(QuadraticValue, ArithmeticSharedRadicand) {
  const auto x = qv_from(1, 1, 2);
  const auto y = qv_from(1, -1, 2);
  EXPECT_EQ((x * y), QuadraticValue(-1));
  EXPECT_EQ((x + y), QuadraticValue(2));
  EXPECT_TRUE((x + y).is_rational());
  EXPECT_THROW(x + qv_from(0, 1, 3), Error);
}

TEST(QuadraticValue, FloorCeil) {
  const auto b = qv_from(Rational(-1, 4), Rational(-1, 12), 69);  // -0.942...
  EXPECT_EQ(b.floor(), -1);
  EXPECT_EQ(b.ceil(), 0);
  EXPECT_EQ(qv_from(0, 1000, 2).floor(), 1414);
  EXPECT_EQ(qv_from(0, -1000, 2).floor(), -1415);
  EXPECT_EQ(QuadraticValue(Rational(7, 2)).floor(), 3);
}

TEST(QuadraticValue, TwoRadicalSign) {
  // sqrt2 + sqrt3 - sqrt(5 + 2 sqrt6) = 0 is not expressible here; use
  // sqrt8 - 2 sqrt2 = 0 and 1 + sqrt2 - sqrt5 > 0.
  EXPECT_EQ(sign_of_two_radicals(0, 1, 8, -2, 2), 0);
  EXPECT_EQ(sign_of_two_radicals(1, 1, 2, -1, 5), 1);
  EXPECT_EQ(sign_of_two_radicals(-3, 1, 2, 1, 3), 1);   // 1.414 + 1.732 > 3
  EXPECT_EQ(sign_of_two_radicals(-4, 1, 2, 1, 3), -1);
}

TEST(QuadraticValueProperty, CompareMatchesDecimalOracle) {
  const auto r = props::qv_cmp_vs_decimal(11, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(QuadraticValueProperty, OrderLaws) {
  const auto r = props::qv_order_laws(12, 10000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
