#pragma once

#include "grossone/error.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/set_algebra.hpp"

// Every sum here takes an explicit number of addends, finite or infinite.

namespace grossone {

namespace detail {
inline void require_count(const GrossNumber& k, const char* what, bool allow_zero = false) {
  require_gross_integer(k, what);
  const int s = sign(k);
  if (s < 0 || (s == 0 && !allow_zero))
    throw Error(ErrorKind::InvalidArgument, std::string(what) + (allow_zero ? " must be nonnegative" : " must be positive"));
}
}  // namespace detail

/// first + (first+step) + ... with `count` addends.
inline GrossNumber ap_sum(const GrossNumber& first, const GrossNumber& step, const GrossNumber& count) {
  detail::require_count(count, "addend count", true);
  return count * first + step * count * (count - 1) / GrossNumber(2);
}

/// 1 + 2 + ... + n = n(n+1)/2.
inline GrossNumber triangular(const GrossNumber& n) {
  detail::require_count(n, "triangular argument");
  return n * (n + 1) / GrossNumber(2);
}

/// q + q^2 + ... + q^k = q(q^k - 1)/(q - 1) for k = a*G + d.
inline GrossNumber geometric(const Rational& q, const GrossNumber& k) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "ratio must be nonzero");
  if (q == 1) throw Error(ErrorKind::UnitRatio, "ratio 1 is an arithmetic progression; use ap_sum");
  if (!linear_in_grossone(k))
    throw Error(ErrorKind::ExponentNotLinearInGrossone, "length must have the form a*G + d with integer a and d");
  detail::require_count(k, "length", true);
  GrossNumber qk = exp_gross(abs(q), k);
  if (q < 0 && parity(k) == Parity::Odd) qk = -qk;
  return GrossNumber(q) * (qk - 1) / GrossNumber(q - 1);
}

/// x(k) = 1 + 2 + 4 + ... + 2^(k-1) = 2^k - 1.
inline GrossNumber powers_of_two_sum(const GrossNumber& k) {
  const auto lin = linear_in_grossone(k);
  if (!lin || lin->first < 0)
    throw Error(ErrorKind::ExponentNotLinearInGrossone, "length must have the form a*G + d with integers a >= 0 and d");
  detail::require_count(k, "length", true);
  return exp_gross(Rational(2), k) - 1;
}

struct GrandiResult {
  int value = 0;
  Parity length_parity = Parity::Even;
};

/// 1 - 1 + 1 - ... with k addends: 0 for even k, 1 for odd k.
inline GrandiResult grandi(const GrossNumber& k) {
  require_gross_integer(k, "length");
  if (sign(k) <= 0) throw Error(ErrorKind::InvalidArgument, "length must be positive");
  const Parity p = parity(k);
  return GrandiResult{p == Parity::Even ? 0 : 1, p};
}

/// Grandi's series of even length k regrouped as 1 + 1 - 1 blocks until the
/// k/2 positive units run out, then the remaining negative units.
struct GrandiRearrangement {
  GrossNumber positives;           // k/2
  GrossNumber negatives;           // k/2
  GrossNumber blocks;              // floor(positives / 2) groups of (1 + 1 - 1)
  GrossNumber leftover_positive;   // positives mod 2
  GrossNumber trailing_negatives;  // negatives - blocks
  GrossNumber total;
};

inline GrandiRearrangement grandi_rearranged(const GrossNumber& k) {
  require_gross_integer(k, "length");
  if (sign(k) <= 0) throw Error(ErrorKind::InvalidArgument, "length must be positive");
  if (parity(k) != Parity::Even) throw Error(ErrorKind::OddLength, "the regrouping needs an even number of addends");
  GrandiRearrangement r;
  r.positives = k / GrossNumber(2);
  r.negatives = r.positives;
  const DivMod dm = floor_div_mod(r.positives, 2);
  r.blocks = dm.quotient;
  r.leftover_positive = GrossNumber(dm.remainder);
  r.trailing_negatives = r.negatives - r.blocks;
  // each block contributes 1 + 1 - 1 = 1
  r.total = r.blocks + r.leftover_positive - r.trailing_negatives;
  return r;
}

/// -3c(n) computed directly and through the displaced-addend grouping
/// (odd terms) - (even terms) - 4*((n/2 + 1) + ... + n).
struct RamanujanAudit {
  GrossNumber lhs;  // -3 * triangular(n)
  GrossNumber rhs;  // grouped form
  bool consistent = false;
};

inline RamanujanAudit ramanujan_audit(const GrossNumber& n = GrossNumber::grossone()) {
  detail::require_count(n, "length");
  if (parity(n) != Parity::Even) throw Error(ErrorKind::OddLength, "the grouping needs an even number of addends");
  const GrossNumber half = n / GrossNumber(2);
  RamanujanAudit audit;
  audit.lhs = GrossNumber(-3) * triangular(n);
  const GrossNumber odd_terms = ap_sum(1, 2, half);
  const GrossNumber even_terms = ap_sum(2, 2, half);
  const GrossNumber displaced = ap_sum(half + 1, 1, half);
  audit.rhs = odd_terms - even_terms - GrossNumber(4) * displaced;
  const GrossNumber expected = GrossNumber(-3) * half * (n + 1);
  audit.consistent = audit.lhs == audit.rhs && audit.rhs == expected;
  return audit;
}

/// T(k): k addends each equal to G^-2.
inline GrossNumber infinitesimal_sum(const GrossNumber& k) {
  detail::require_count(k, "addend count");
  return GrossNumber::term(Rational(1), Rational(-2)) * k;
}

}  // namespace grossone
