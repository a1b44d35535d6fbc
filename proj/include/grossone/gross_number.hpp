#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/rational.hpp"

namespace grossone {

/// One monomial `coeff * base^G * G^gpow`. A base of 1 means the exponential
/// factor is absent.
struct GrossTerm {
  Rational coeff;
  Rational base{1};
  Rational gpow{0};

  friend bool operator==(const GrossTerm& a, const GrossTerm& b) {
    return a.coeff == b.coeff && a.base == b.base && a.gpow == b.gpow;
  }
};

/// Orders terms by growth: a larger exponential base dominates any power of
/// G, then a larger power of G wins.
inline std::strong_ordering compare_key(const GrossTerm& a, const GrossTerm& b) {
  if (a.base != b.base) return a.base < b.base ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.gpow != b.gpow) return a.gpow < b.gpow ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Sign of the key relative to the finite key (base 1, power 0).
inline std::strong_ordering compare_to_finite_key(const GrossTerm& t) {
  return compare_key(t, GrossTerm{Rational(1), Rational(1), Rational(0)});
}

enum class NumberClass { Zero, Infinitesimal, FinitePure, FiniteWithInfinitesimalPart, Infinite };

enum class Parity { Even, Odd };

inline const char* to_string(NumberClass c) {
  switch (c) {
    case NumberClass::Zero: return "zero";
    case NumberClass::Infinitesimal: return "infinitesimal";
    case NumberClass::FinitePure: return "finite";
    case NumberClass::FiniteWithInfinitesimalPart: return "finite+infinitesimal";
    case NumberClass::Infinite: return "infinite";
  }
  return "?";
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// A finite sum of GrossTerms kept in canonical form: strictly descending
/// keys, no zero coefficients. The empty sum is zero.
class GrossNumber {
 public:
  GrossNumber() = default;
  GrossNumber(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back(GrossTerm{c, Rational(1), Rational(0)});
  }
  GrossNumber(const Integer& c) : GrossNumber(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GrossNumber(T c) : GrossNumber(Rational(static_cast<long long>(c))) {}  // NOLINT(google-explicit-constructor)

  /// The grossone numeral itself.
  static GrossNumber grossone() { return term(Rational(1), Rational(1)); }

  static GrossNumber term(const Rational& coeff, const Rational& gpow, const Rational& base = Rational(1)) {
    return normalize({GrossTerm{coeff, base, gpow}});
  }

  /// Merges equal keys, drops zero coefficients and sorts descending by key.
  static GrossNumber normalize(std::vector<GrossTerm> raw) {
    for (const auto& t : raw)
      if (t.base <= 0) throw Error(ErrorKind::InvalidArgument, "exponential base must be positive");
    std::stable_sort(raw.begin(), raw.end(),
                     [](const GrossTerm& a, const GrossTerm& b) { return compare_key(a, b) > 0; });
    GrossNumber out;
    for (auto& t : raw) {
      if (!out.terms_.empty() && compare_key(out.terms_.back(), t) == 0) {
        out.terms_.back().coeff += t.coeff;
      } else {
        if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
    return out;
  }

  const std::vector<GrossTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const GrossTerm& leading() const { return terms_.front(); }
  const GrossTerm& trailing() const { return terms_.back(); }

  /// Coefficient of the finite key, zero when absent.
  Rational constant_term() const {
    for (const auto& t : terms_)
      if (compare_to_finite_key(t) == 0) return t.coeff;
    return Rational(0);
  }

  /// The value as a plain rational when no G appears.
  std::optional<Rational> as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && compare_to_finite_key(terms_.front()) == 0) return terms_.front().coeff;
    return std::nullopt;
  }

  bool is_rational() const { return as_rational().has_value(); }

  friend bool operator==(const GrossNumber& a, const GrossNumber& b) { return a.terms_ == b.terms_; }

  friend GrossNumber operator-(const GrossNumber& a) {
    GrossNumber out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) {
    std::vector<GrossTerm> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return normalize(std::move(raw));
  }

  friend GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return a + (-b); }

  friend GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) {
    std::vector<GrossTerm> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) raw.push_back(GrossTerm{x.coeff * y.coeff, x.base * y.base, x.gpow + y.gpow});
    return normalize(std::move(raw));
  }

  friend GrossNumber operator/(const GrossNumber& a, const GrossNumber& b);
  friend std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b);

  GrossNumber& operator+=(const GrossNumber& b) { return *this = *this + b; }
  GrossNumber& operator-=(const GrossNumber& b) { return *this = *this - b; }
  GrossNumber& operator*=(const GrossNumber& b) { return *this = *this * b; }

 private:
  std::vector<GrossTerm> terms_;
};

inline GrossNumber add(const GrossNumber& a, const GrossNumber& b) { return a + b; }
inline GrossNumber neg(const GrossNumber& a) { return -a; }
inline GrossNumber mul(const GrossNumber& a, const GrossNumber& b) { return a * b; }

/// Sign of the leading coefficient.
inline int sign(const GrossNumber& a) { return a.is_zero() ? 0 : sign_of(a.leading().coeff); }

inline std::strong_ordering compare(const GrossNumber& a, const GrossNumber& b) {
  const int s = sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b) { return compare(a, b); }

namespace detail {

inline GrossTerm divide_term(const GrossTerm& a, const GrossTerm& b) {
  return GrossTerm{a.coeff / b.coeff, a.base / b.base, a.gpow - b.gpow};
}

// Long division stops after this many quotient terms and reports the
// division as inexact.
inline constexpr std::size_t kMaxQuotientTerms = 1u << 14;

}  // namespace detail

/// Exact division. Monomial divisors divide termwise; otherwise graded long
/// division runs in descending key order and must leave no remainder.
inline GrossNumber div_exact(const GrossNumber& a, const GrossNumber& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    std::vector<GrossTerm> raw;
    raw.reserve(a.size());
    for (const auto& t : a.terms()) raw.push_back(detail::divide_term(t, b.leading()));
    return GrossNumber::normalize(std::move(raw));
  }
  // If a = q*b exactly then trailing(a) = trailing(q)*trailing(b), so no
  // quotient term may fall below trailing(a)/trailing(b).
  const GrossTerm floor_key = detail::divide_term(a.trailing(), b.trailing());
  std::vector<GrossTerm> quotient;
  GrossNumber rem = a;
  while (!rem.is_zero()) {
    GrossTerm q = detail::divide_term(rem.leading(), b.leading());
    if (compare_key(q, floor_key) < 0 || quotient.size() >= detail::kMaxQuotientTerms) {
      throw Error(ErrorKind::NotExactlyDivisible, "nonzero remainder; no exact quotient exists");
    }
    rem = rem - b * GrossNumber::normalize({q});
    quotient.push_back(std::move(q));
  }
  return GrossNumber::normalize(std::move(quotient));
}

inline GrossNumber operator/(const GrossNumber& a, const GrossNumber& b) { return div_exact(a, b); }

/// a^k by repeated exact multiplication. Negative k needs a monomial.
inline GrossNumber pow_int(const GrossNumber& a, std::int64_t k) {
  if (k == 0) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroToZero, "0^0 is undefined");
    return GrossNumber(1);
  }
  if (a.is_monomial()) {
    const auto& t = a.leading();
    return GrossNumber::normalize({GrossTerm{power(t.coeff, k), power(t.base, k), t.gpow * Rational(k)}});
  }
  if (k < 0) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
    throw Error(ErrorKind::NegativePowerOfSum, "negative powers need a single-term base");
  }
  if (a.is_zero()) return a;
  GrossNumber result(1), base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Decomposes e = a*G + d with integers a, d.
inline std::optional<std::pair<Integer, Integer>> linear_in_grossone(const GrossNumber& e) {
  Integer a = 0, d = 0;
  for (const auto& t : e.terms()) {
    if (t.base != 1 || !is_integer(t.coeff)) return std::nullopt;
    if (t.gpow == 1)
      a = numerator_of(t.coeff);
    else if (t.gpow == 0)
      d = numerator_of(t.coeff);
    else
      return std::nullopt;
  }
  return std::make_pair(a, d);
}

/// b^e for an exponent e = a*G + d: the single term b^d * (b^a)^G.
/// 0^e is 0 for positive e and 1^e is 1.
inline GrossNumber exp_gross(const Rational& b, const GrossNumber& e) {
  const auto lin = linear_in_grossone(e);
  if (!lin)
    throw Error(ErrorKind::ExponentNotLinearInGrossone, "exponent must have the form a*G + d with integer a and d");
  if (b < 0) throw Error(ErrorKind::InvalidArgument, "exponential base must be nonnegative");
  if (b == 0) {
    if (sign(e) > 0) return GrossNumber();
    if (e.is_zero()) throw Error(ErrorKind::ZeroToZero, "0^0 is undefined");
    throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
  }
  const auto a = to_int64(lin->first, "exponent");
  const auto d = to_int64(lin->second, "exponent");
  return GrossNumber::normalize({GrossTerm{power(b, d), power(b, a), Rational(0)}});
}

inline NumberClass classify(const GrossNumber& a) {
  if (a.is_zero()) return NumberClass::Zero;
  const auto lead = compare_to_finite_key(a.leading());
  if (lead > 0) return NumberClass::Infinite;
  if (lead < 0) return NumberClass::Infinitesimal;
  return a.size() == 1 ? NumberClass::FinitePure : NumberClass::FiniteWithInfinitesimalPart;
}

namespace detail {
template <class Pred>
GrossNumber filter_terms(const GrossNumber& a, Pred keep) {
  std::vector<GrossTerm> out;
  for (const auto& t : a.terms())
    if (keep(compare_to_finite_key(t))) out.push_back(t);
  return GrossNumber::normalize(std::move(out));
}
}  // namespace detail

inline GrossNumber infinite_part(const GrossNumber& a) {
  return detail::filter_terms(a, [](std::strong_ordering o) { return o > 0; });
}
inline GrossNumber finite_part(const GrossNumber& a) {
  return detail::filter_terms(a, [](std::strong_ordering o) { return o == 0; });
}
inline GrossNumber infinitesimal_part(const GrossNumber& a) {
  return detail::filter_terms(a, [](std::strong_ordering o) { return o < 0; });
}

/// Integer-valued under Divisibility: base 1, nonnegative integer powers of
/// G, integer constant term. Non-constant coefficients may be fractions
/// since G/n is an integer for every finite n.
inline bool is_gross_integer(const GrossNumber& x) {
  for (const auto& t : x.terms()) {
    if (t.base != 1 || !is_integer(t.gpow) || t.gpow < 0) return false;
    if (t.gpow == 0 && !is_integer(t.coeff)) return false;
  }
  return true;
}

inline void require_gross_integer(const GrossNumber& x, const char* what) {
  if (!is_gross_integer(x)) throw Error(ErrorKind::NotAGrossInteger, std::string(what) + " must be a gross-integer");
}

/// Non-constant terms are multiples of G/n for finite n, and G is divisible
/// by every finite 2n, so only the constant term decides parity.
inline Parity parity(const GrossNumber& x) {
  require_gross_integer(x, "parity argument");
  const Integer c = numerator_of(x.constant_term());
  return floor_mod(c, Integer(2)) == 0 ? Parity::Even : Parity::Odd;
}

struct DivMod {
  GrossNumber quotient;
  Integer remainder;
};

/// x = n*quotient + remainder with 0 <= remainder < n.
inline DivMod floor_div_mod(const GrossNumber& x, const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "divisor must be a positive integer");
  require_gross_integer(x, "dividend");
  Integer r = floor_mod(numerator_of(x.constant_term()), n);
  return DivMod{div_exact(x - GrossNumber(r), GrossNumber(n)), std::move(r)};
}

inline GrossNumber nth_root(const GrossNumber& a, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root degree must be positive");
  if (n == 1) return a;
  if (!a.is_monomial()) throw Error(ErrorKind::NotAMonomial, "roots are taken of single terms only");
  const auto& t = a.leading();
  if (t.coeff < 0) throw Error(ErrorKind::CoefficientNotPerfectPower, "negative coefficient");
  if (t.base != 1) throw Error(ErrorKind::BaseRootUnsupported, "roots of exponential factors are not supported");
  auto root = exact_root(t.coeff, n);
  if (!root)
    throw Error(ErrorKind::CoefficientNotPerfectPower, to_string(t.coeff) + " is not a perfect power of degree " +
                                                           std::to_string(n));
  return GrossNumber::term(*root, t.gpow / Rational(static_cast<long long>(n)));
}

/// Substitutes G := t and evaluates exactly. A ring homomorphism for
/// integer powers of G.
inline Rational eval_at(const GrossNumber& a, const Integer& t) {
  if (t <= 0) throw Error(ErrorKind::InvalidArgument, "substitution value must be positive");
  for (const auto& term : a.terms())
    if (!is_integer(term.gpow))
      throw Error(ErrorKind::FractionalGrossPower, "fractional powers of G have no finite substitution");
  const auto tt = to_int64(t, "substitution value");
  Rational sum = 0;
  const Rational tr(t);
  for (const auto& term : a.terms()) {
    Rational v = term.coeff * power(tr, to_int64(numerator_of(term.gpow), "power of G"));
    if (term.base != 1) v *= power(term.base, tt);
    sum += v;
  }
  return sum;
}

namespace detail {

inline std::string coeff_factor(const Rational& c) {
  return is_integer(c) ? to_string(c) : "(" + to_string(c) + ")";
}

// Magnitude of one term; the caller emits the sign.
inline std::string format_abs_term(const GrossTerm& t) {
  const Rational c = abs(t.coeff);
  std::string factors;
  if (t.base != 1) factors = coeff_factor(t.base) + "^G";
  if (t.gpow != 0) {
    if (!factors.empty()) factors += "*";
    if (t.gpow == 1)
      factors += "G";
    else if (is_integer(t.gpow))
      factors += "G^" + to_string(t.gpow);
    else
      factors += "G^(" + to_string(t.gpow) + ")";
  }
  if (factors.empty()) return to_string(c);
  if (c == 1) return factors;
  return coeff_factor(c) + "*" + factors;
}

}  // namespace detail

/// Canonical text: terms in descending key order, e.g. "2*G + 1",
/// "(1/2)*G^2 + (1/2)*G", "1 - (1/2)^G". Zero is "0".
inline std::string format(const GrossNumber& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    const bool negative = t.coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += detail::format_abs_term(t);
    first = false;
  }
  return out;
}

}  // namespace grossone
