#include <gtest/gtest.h>

#include "grossone/gross_number.hpp"

using namespace grossone;

namespace {

const GrossNumber G = GrossNumber::grossone();

GrossNumber T(Rational c, Rational p, Rational b = 1) { return GrossNumber::term(c, p, b); }

#define EXPECT_KIND(stmt, k)                      \
  try {                                           \
    (void)(stmt);                                 \
    ADD_FAILURE() << "expected " << to_string(k); \
  } catch (const Error& e) {                      \
    EXPECT_EQ(e.kind(), k) << e.what();           \
  }

}  // namespace

TEST(Rational, PowerAndRoots) {
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(power(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(power(Rational(-1), -7), Rational(-1));
  EXPECT_EQ(power(Rational(1), INT64_MAX), Rational(1));
  EXPECT_KIND(power(Rational(0), -1), ErrorKind::DivisionByZero);
  EXPECT_KIND(power(Rational(2), std::int64_t{1} << 40), ErrorKind::InvalidArgument);
  EXPECT_EQ(exact_root(Integer(1024), 10), Integer(2));
  EXPECT_FALSE(exact_root(Integer(1025), 10));
  EXPECT_EQ(exact_root(Rational(4, 9), 2), Rational(2, 3));
  EXPECT_EQ(floor_mod(Integer(-14), Integer(55)), Integer(41));
  EXPECT_EQ(floor_div(Integer(-14), Integer(55)), Integer(-1));
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}

TEST(Normalize, MergesAndOrdersTerms) {
  EXPECT_EQ(GrossNumber::normalize({{1, 1, 1}, {2, 1, 1}}), 3 * G);
  EXPECT_TRUE(GrossNumber::normalize({{1, 1, 0}, {-1, 1, 0}}).is_zero());
  const GrossNumber x = GrossNumber::normalize({{1, 2, 0}, {-1, 1, 5}});
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x.leading().base, Rational(2));
  EXPECT_EQ(format(x), "2^G - G^5");
  // 2^t > t^5 from t = 23 on; sample the ordering far out.
  EXPECT_GT(eval_at(x, 64), 0);
}

TEST(Normalize, RejectsBadTerms) {
  EXPECT_KIND(GrossNumber::normalize({{1, 0, 1}}), ErrorKind::InvalidArgument);
  EXPECT_KIND(GrossNumber::normalize({{1, -2, 1}}), ErrorKind::InvalidArgument);
}

TEST(Arithmetic, AddNeg) {
  EXPECT_EQ(format(G + 1), "G + 1");
  EXPECT_TRUE((G + (-G)).is_zero());
  EXPECT_EQ(exp_gross(2, G) - 1 + 1, exp_gross(2, G));
  EXPECT_EQ(neg(G - 3), 3 - G);
  EXPECT_EQ(add(G, G), 2 * G);
}

TEST(Arithmetic, Mul) {
  EXPECT_TRUE((0 * G).is_zero());
  EXPECT_TRUE((G * 0).is_zero());
  EXPECT_EQ(pow_int(G, -1) * G, GrossNumber(1));
  EXPECT_EQ(T(1, 1, 2) * T(1, 2, 3), T(1, 3, 6));
  EXPECT_EQ(mul(G + 1, G - 1), pow_int(G, 2) - 1);
}

TEST(Arithmetic, DivExact) {
  EXPECT_EQ(G / G, GrossNumber(1));
  EXPECT_EQ((pow_int(G, 2) + G) / G, G + 1);
  EXPECT_EQ((pow_int(G, 2) - 1) / (G - 1), G + 1);
  EXPECT_EQ((pow_int(G, 3) - 1) / (G - 1), pow_int(G, 2) + G + 1);
  EXPECT_KIND((G + 1) / (G - 1), ErrorKind::NotExactlyDivisible);
  EXPECT_KIND(G / GrossNumber(0), ErrorKind::DivisionByZero);
  EXPECT_TRUE((GrossNumber(0) / (G + 1)).is_zero());
  // 1/(1 - G^-1) = 1 + G^-1 + G^-2 + ... never terminates.
  EXPECT_KIND(GrossNumber(1) / (1 - T(1, -1)), ErrorKind::NotExactlyDivisible);
}

TEST(Arithmetic, PowInt) {
  EXPECT_EQ(pow_int(G, 2), T(1, 2));
  EXPECT_EQ(pow_int(G, 0), GrossNumber(1));
  EXPECT_EQ(pow_int(2 * G, -1), T(Rational(1, 2), -1));
  EXPECT_EQ(pow_int(G + 1, 3), pow_int(G, 3) + 3 * pow_int(G, 2) + 3 * G + 1);
  EXPECT_KIND(pow_int(GrossNumber(0), 0), ErrorKind::ZeroToZero);
  EXPECT_KIND(pow_int(GrossNumber(0), -1), ErrorKind::DivisionByZero);
  EXPECT_KIND(pow_int(G + 1, -1), ErrorKind::NegativePowerOfSum);
}

TEST(Arithmetic, ExpGross) {
  EXPECT_EQ(exp_gross(2, G), T(1, 0, 2));
  EXPECT_EQ(exp_gross(2, 3 * G), T(1, 0, 8));
  const GrossNumber half = exp_gross(Rational(1, 2), G);
  EXPECT_EQ(half, T(1, 0, Rational(1, 2)));
  EXPECT_EQ(classify(half), NumberClass::Infinitesimal);
  EXPECT_EQ(exp_gross(2, G + 1), T(2, 0, 2));
  EXPECT_EQ(exp_gross(2, -G), T(1, 0, Rational(1, 2)));
  EXPECT_EQ(exp_gross(1, G), GrossNumber(1));
  EXPECT_TRUE(exp_gross(0, G).is_zero());
  EXPECT_KIND(exp_gross(0, GrossNumber(0)), ErrorKind::ZeroToZero);
  EXPECT_KIND(exp_gross(2, pow_int(G, 2)), ErrorKind::ExponentNotLinearInGrossone);
  EXPECT_KIND(exp_gross(2, G / GrossNumber(2)), ErrorKind::ExponentNotLinearInGrossone);
  EXPECT_KIND(exp_gross(-2, G), ErrorKind::InvalidArgument);
}

TEST(Order, Compare) {
  EXPECT_LT(GrossNumber(7), G);
  EXPECT_LT(nth_root(G, 2), G);
  EXPECT_GT(exp_gross(2, G), pow_int(G, 100));
  EXPECT_GT(exp_gross(Rational(1, 2), G), GrossNumber(0));
  EXPECT_LT(exp_gross(Rational(1, 2), G), pow_int(G, -100));
  EXPECT_LT(G - 1, G);
  EXPECT_EQ(sign(GrossNumber(0)), 0);
  EXPECT_EQ(sign(1 - G), -1);
  EXPECT_EQ(compare(G, G), std::strong_ordering::equal);
}

TEST(Classify, Parts) {
  EXPECT_EQ(classify(T(2, -1)), NumberClass::Infinitesimal);
  EXPECT_EQ(classify(GrossNumber(3)), NumberClass::FinitePure);
  EXPECT_EQ(classify(GrossNumber(0)), NumberClass::Zero);
  EXPECT_EQ(classify(G - 1000000), NumberClass::Infinite);
  const GrossNumber x = 1 - exp_gross(Rational(1, 2), G);
  EXPECT_EQ(classify(x), NumberClass::FiniteWithInfinitesimalPart);
  EXPECT_EQ(finite_part(x), GrossNumber(1));
  EXPECT_EQ(infinitesimal_part(x), -exp_gross(Rational(1, 2), G));
  EXPECT_TRUE(infinite_part(x).is_zero());
  const GrossNumber y = exp_gross(2, G) + 3 * G + 5 + T(1, -1);
  EXPECT_EQ(infinite_part(y), exp_gross(2, G) + 3 * G);
  EXPECT_EQ(infinite_part(y) + finite_part(y) + infinitesimal_part(y), y);
}

TEST(Parity, ConstantTermDecides) {
  EXPECT_EQ(parity(G), Parity::Even);
  EXPECT_EQ(parity(G - 1), Parity::Odd);
  EXPECT_EQ(parity(G / GrossNumber(55) + 3), Parity::Odd);
  EXPECT_EQ(parity(G / GrossNumber(3)), Parity::Even);
  EXPECT_EQ(parity(GrossNumber(-3)), Parity::Odd);
  EXPECT_KIND(parity(T(1, -1)), ErrorKind::NotAGrossInteger);
  EXPECT_KIND(parity(GrossNumber(Rational(1, 2))), ErrorKind::NotAGrossInteger);
  EXPECT_KIND(parity(exp_gross(2, G)), ErrorKind::NotAGrossInteger);
}

TEST(FloorDivMod, Examples) {
  auto dm = floor_div_mod(G, 55);
  EXPECT_EQ(dm.quotient, G / GrossNumber(55));
  EXPECT_EQ(dm.remainder, 0);
  dm = floor_div_mod(G - 14, 55);
  EXPECT_EQ(dm.quotient, G / GrossNumber(55) - 1);
  EXPECT_EQ(dm.remainder, 41);
  // G := 550: 536 = 55*9 + 41.
  EXPECT_EQ(eval_at(dm.quotient, 550), 9);
  dm = floor_div_mod(GrossNumber(7), 3);
  EXPECT_EQ(dm.quotient, GrossNumber(2));
  EXPECT_EQ(dm.remainder, 1);
  EXPECT_KIND(floor_div_mod(G, 0), ErrorKind::InvalidArgument);
  EXPECT_KIND(floor_div_mod(T(1, -1), 2), ErrorKind::NotAGrossInteger);
}

TEST(NthRoot, Examples) {
  EXPECT_EQ(nth_root(G, 2), T(1, Rational(1, 2)));
  EXPECT_EQ(nth_root(4 * pow_int(G, 2), 2), 2 * G);
  EXPECT_EQ(nth_root(Rational(8, 27) * pow_int(G, 3), 3), Rational(2, 3) * G);
  EXPECT_KIND(nth_root(2 * G, 2), ErrorKind::CoefficientNotPerfectPower);
  EXPECT_KIND(nth_root(-G, 2), ErrorKind::CoefficientNotPerfectPower);
  EXPECT_KIND(nth_root(G + 1, 2), ErrorKind::NotAMonomial);
  EXPECT_KIND(nth_root(exp_gross(4, G), 2), ErrorKind::BaseRootUnsupported);
  EXPECT_KIND(nth_root(G, 0), ErrorKind::InvalidArgument);
  EXPECT_EQ(nth_root(G + 1, 1), G + 1);
}

TEST(EvalAt, Examples) {
  EXPECT_EQ(eval_at(G + 1, 100), 101);
  EXPECT_EQ(eval_at(exp_gross(2, G) - 1, 10), 1023);
  EXPECT_EQ(eval_at(T(3, -2), 10), Rational(3, 100));
  EXPECT_KIND(eval_at(nth_root(G, 2), 100), ErrorKind::FractionalGrossPower);
  EXPECT_KIND(eval_at(G, 0), ErrorKind::InvalidArgument);
}

TEST(Format, Canonical) {
  EXPECT_EQ(format(G), "G");
  EXPECT_EQ(format(2 * G + 1), "2*G + 1");
  EXPECT_EQ(format(1 - exp_gross(Rational(1, 2), G)), "1 - (1/2)^G");
  EXPECT_EQ(format(GrossNumber(0)), "0");
  EXPECT_EQ(format(-G), "-G");
  EXPECT_EQ(format(Rational(-1, 2) * G), "-(1/2)*G");
  EXPECT_EQ(format(T(1, -1)), "G^-1");
  EXPECT_EQ(format(T(3, Rational(1, 2))), "3*G^(1/2)");
  EXPECT_EQ(format(T(Rational(2, 3), -2, Rational(3, 2))), "(2/3)*(3/2)^G*G^-2");
  EXPECT_EQ(format(pow_int(G, 2) / GrossNumber(2) + G / GrossNumber(2)), "(1/2)*G^2 + (1/2)*G");
}

TEST(GrossInteger, Recognition) {
  EXPECT_TRUE(is_gross_integer(G / GrossNumber(55)));
  EXPECT_TRUE(is_gross_integer(2 * G + 1));
  EXPECT_TRUE(is_gross_integer(GrossNumber(0)));
  EXPECT_FALSE(is_gross_integer(G + Rational(1, 2)));
  EXPECT_FALSE(is_gross_integer(T(1, -1)));
  EXPECT_FALSE(is_gross_integer(nth_root(G, 2)));
  EXPECT_FALSE(is_gross_integer(exp_gross(2, G)));
}

TEST(LinearInGrossone, Decomposition) {
  EXPECT_EQ(linear_in_grossone(3 * G - 2), std::make_pair(Integer(3), Integer(-2)));
  EXPECT_EQ(linear_in_grossone(GrossNumber(5)), std::make_pair(Integer(0), Integer(5)));
  EXPECT_FALSE(linear_in_grossone(pow_int(G, 2)));
  EXPECT_FALSE(linear_in_grossone(G / GrossNumber(2)));
}
