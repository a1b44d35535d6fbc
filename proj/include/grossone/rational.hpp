#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "grossone/error.hpp"

namespace grossone {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
/// Always reduced with a positive denominator; zero is 0/1.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Integer& i) { return i.sign(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return Rational(num, den);
}

/// Least nonnegative residue of a modulo n (n > 0).
inline Integer floor_mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

/// Floor division for n > 0.
inline Integer floor_div(const Integer& a, const Integer& n) { return (a - floor_mod(a, n)) / n; }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

/// Largest |k| accepted by power() for r other than 0, 1 and -1.
inline constexpr std::int64_t kMaxPowerExponent = std::int64_t{1} << 24;

/// r^k for any integer k; 0^k with k < 0 is a division by zero.
inline Rational power(const Rational& r, std::int64_t k) {
  if (k == 0) return Rational(1);
  if (r == 1) return r;
  if (r == -1) return (k % 2 == 0) ? Rational(1) : r;
  if ((k > kMaxPowerExponent || k < -kMaxPowerExponent) && r != 0)
    throw Error(ErrorKind::InvalidArgument, "exponent " + std::to_string(k) + " is too large to expand exactly");
  if (k < 0) {
    if (r == 0) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
    const auto e = static_cast<unsigned>(-k);
    return make_rational(boost::multiprecision::pow(denominator_of(r), e),
                         boost::multiprecision::pow(numerator_of(r), e));
  }
  const auto e = static_cast<unsigned>(k);
  // The components of a reduced fraction stay coprime under powers.
  Rational out;
  const Integer num = boost::multiprecision::pow(numerator_of(r), e);
  const Integer den = boost::multiprecision::pow(denominator_of(r), e);
  mpq_set_num(out.backend().data(), num.backend().data());
  mpq_set_den(out.backend().data(), den.backend().data());
  return out;
}

inline std::int64_t to_int64(const Integer& i, const char* what) {
  if (i > Integer(INT64_MAX) || i < Integer(INT64_MIN))
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is out of the supported range");
  return i.convert_to<std::int64_t>();
}

/// Exact n-th root of a nonnegative integer, if it exists.
inline std::optional<Integer> exact_root(const Integer& x, unsigned n) {
  if (x < 0 || n == 0) return std::nullopt;
  if (x < 2 || n == 1) return x;
  Integer r;
  mpz_root(r.backend().data(), x.backend().data(), n);
  if (boost::multiprecision::pow(r, n) != x) return std::nullopt;
  return r;
}

inline std::optional<Rational> exact_root(const Rational& x, unsigned n) {
  auto num = exact_root(numerator_of(x), n);
  auto den = exact_root(denominator_of(x), n);
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::string to_string(const Integer& i) { return i.str(); }

}  // namespace grossone
