#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "grossone/error.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/rational.hpp"

namespace grossone {

/// {first + (i-1)*step : 1 <= i <= count}. The step is a finite positive
/// integer; first and count are gross-integers, count positive.
struct GrossAP {
  GrossNumber first;
  Integer step;
  GrossNumber count;

  static GrossAP make(GrossNumber first, Integer step, GrossNumber count) {
    if (step <= 0) throw Error(ErrorKind::InvalidArgument, "progression step must be a positive integer");
    require_gross_integer(first, "progression start");
    require_gross_integer(count, "progression count");
    if (sign(count) <= 0) throw Error(ErrorKind::InvalidArgument, "progression count must be positive");
    return GrossAP{std::move(first), std::move(step), std::move(count)};
  }

  GrossNumber last() const { return first + (count - 1) * GrossNumber(step); }
  bool has_finite_first() const { return first.is_rational(); }

  friend bool operator==(const GrossAP&, const GrossAP&) = default;
};

/// N_{k,n} = {k, k+n, k+2n, ...} with G/n elements.
inline GrossAP ap_nat(const Integer& k, const Integer& n) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorKind::ResidueOutOfRange, "need 1 <= k <= n, got k=" + k.str() + ", n=" + n.str());
  return GrossAP::make(GrossNumber(k), n, GrossNumber::grossone() / GrossNumber(n));
}

inline GrossAP naturals() { return ap_nat(1, 1); }
inline GrossAP odds() { return ap_nat(1, 2); }
inline GrossAP evens() { return ap_nat(2, 2); }

/// {-G, ..., -1, 0, 1, ..., G}.
inline GrossAP integers_set() {
  const auto g = GrossNumber::grossone();
  return GrossAP::make(-g, 1, 2 * g + 1);
}

inline GrossNumber cardinality(const GrossAP& s) { return s.count; }

inline GrossNumber last_element(const GrossAP& s) { return s.last(); }

inline GrossNumber element_at(const GrossAP& s, const GrossNumber& i) {
  require_gross_integer(i, "index");
  if (i < GrossNumber(1) || i > s.count)
    throw Error(ErrorKind::IndexOutOfRange, "index " + format(i) + " outside 1.." + format(s.count));
  return s.first + (i - 1) * GrossNumber(s.step);
}

/// Residue test plus the symbolic range test first <= x <= last.
inline bool member(const GrossAP& s, const GrossNumber& x) {
  if (!is_gross_integer(x)) return false;
  if (x < s.first || x > s.last()) return false;
  return floor_div_mod(x - s.first, s.step).remainder == 0;
}

namespace detail {

// Returns (g, u) with u*a == g (mod m), g = gcd(a, m).
inline std::pair<Integer, Integer> ext_gcd(const Integer& a, const Integer& m) {
  Integer old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return {old_r, old_s};
}

}  // namespace detail

/// Intersection of two progressions with finite starts, via the Chinese
/// remainder theorem. Returns nullopt when the result is empty.
inline std::optional<GrossAP> intersect(const GrossAP& a, const GrossAP& b) {
  if (!a.has_finite_first() || !b.has_finite_first())
    throw Error(ErrorKind::GrossFirstUnsupported, "intersection needs progressions with finite first elements");
  const Integer a1 = numerator_of(*a.first.as_rational());
  const Integer a2 = numerator_of(*b.first.as_rational());
  const auto [g, u] = detail::ext_gcd(a.step, b.step);
  const Integer diff = a2 - a1;
  if (floor_mod(diff, g) != 0) return std::nullopt;
  const Integer step = a.step / g * b.step;
  const Integer m2 = b.step / g;
  const Integer k = floor_mod((diff / g) * u, m2);
  const Integer residue = floor_mod(a1 + a.step * k, step);

  const Integer lo = a1 > a2 ? a1 : a2;
  const GrossNumber first(lo + floor_mod(residue - lo, step));
  const GrossNumber la = a.last(), lb = b.last();
  const GrossNumber upper = la < lb ? la : lb;
  if (upper < first) return std::nullopt;
  const DivMod dm = floor_div_mod(upper - first, step);
  return GrossAP::make(first, step, dm.quotient + 1);
}

/// Multiplies every element by m; the element count is unchanged.
inline GrossAP scale(const GrossAP& s, const Integer& m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "scale factor must be a positive integer");
  return GrossAP::make(s.first * GrossNumber(m), s.step * m, s.count);
}

/// A progression (or nothing) adjusted by finitely many added or removed
/// integers. added is disjoint from the base, removed is a subset of it.
struct AdjustedSet {
  std::optional<GrossAP> base;
  std::set<Integer> added;
  std::set<Integer> removed;

  AdjustedSet() = default;
  AdjustedSet(GrossAP ap) : base(std::move(ap)) {}  // NOLINT(google-explicit-constructor)
  AdjustedSet(std::optional<GrossAP> ap) : base(std::move(ap)) {}  // NOLINT(google-explicit-constructor)

  bool is_plain() const { return added.empty() && removed.empty(); }

  friend bool operator==(const AdjustedSet&, const AdjustedSet&) = default;
};

inline bool member(const AdjustedSet& s, const GrossNumber& x) {
  if (auto v = x.as_rational(); v && is_integer(*v)) {
    const Integer xi = numerator_of(*v);
    if (s.added.contains(xi)) return true;
    if (s.removed.contains(xi)) return false;
  }
  return s.base && member(*s.base, x);
}

inline GrossNumber cardinality(const AdjustedSet& s) {
  GrossNumber c = s.base ? s.base->count : GrossNumber();
  return c + GrossNumber(static_cast<long long>(s.added.size())) -
         GrossNumber(static_cast<long long>(s.removed.size()));
}

inline AdjustedSet add_finite(AdjustedSet s, std::span<const Integer> elems) {
  for (const auto& x : elems) {
    if (member(s, GrossNumber(x))) throw Error(ErrorKind::ElementAlreadyPresent, x.str() + " is already in the set");
    if (!s.removed.erase(x)) s.added.insert(x);
  }
  return s;
}

inline AdjustedSet remove_finite(AdjustedSet s, std::span<const Integer> elems) {
  for (const auto& x : elems) {
    if (!member(s, GrossNumber(x))) throw Error(ErrorKind::ElementNotPresent, x.str() + " is not in the set");
    if (!s.added.erase(x)) s.removed.insert(x);
  }
  return s;
}

/// Number of ordered pairs (x, y) with x in a, y in b.
inline GrossNumber couples_count(const AdjustedSet& a, const AdjustedSet& b) {
  return cardinality(a) * cardinality(b);
}

/// floor(radicand^(1/degree)), kept unevaluated. Only upper_value() is a
/// gross-number; the floor J satisfies J <= upper_value() < J + 1.
struct RootCount {
  GrossNumber radicand;
  unsigned degree = 1;

  GrossNumber upper_value() const { return nth_root(radicand, degree); }
  /// With degree 1 no floor is needed and the count is the radicand itself.
  bool is_exact() const { return degree == 1; }
  /// upper_value()^degree reproduces the radicand exactly.
  bool bracket_holds() const { return pow_int(upper_value(), degree) == radicand; }

  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Number of squares i^2 <= G, i.e. max{i : i^2 <= G}.
inline RootCount squares_count() { return RootCount{GrossNumber::grossone(), 2}; }

inline std::string format(const RootCount& r) {
  if (r.is_exact()) return format(r.radicand);
  return "floor(" + format(r.upper_value()) + ")";
}

inline std::string format(const GrossAP& s) {
  return "AP(first=" + format(s.first) + ", step=" + s.step.str() + ", count=" + format(s.count) + ")";
}

namespace detail {
inline std::string brace_list(const std::set<Integer>& xs) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += ",";
    out += x.str();
    first = false;
  }
  return out + "}";
}
}  // namespace detail

inline std::string format(const AdjustedSet& s) {
  std::string out = s.base ? format(*s.base) : "Empty";
  if (!s.added.empty()) out += " + " + detail::brace_list(s.added);
  if (!s.removed.empty()) out += " - " + detail::brace_list(s.removed);
  return out;
}

}  // namespace grossone
