#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/series.hpp"
#include "grossone/set_algebra.hpp"

namespace grossone {

struct Claim {
  std::string desc;
  std::string value;
  bool ok = false;
};

/// The outcome of one scenario as checkable claims. RESOLVED iff every
/// claim holds.
struct ParadoxReport {
  std::string name;
  std::vector<Claim> claims;
  std::string narrative;

  bool resolved() const {
    for (const auto& c : claims)
      if (!c.ok) return false;
    return !claims.empty();
  }

  void add(std::string desc, std::string value, bool ok) {
    claims.push_back(Claim{std::move(desc), std::move(value), ok});
  }
};

enum class LampState { On, Off };

inline LampState toggled(LampState s) { return s == LampState::On ? LampState::Off : LampState::On; }
inline const char* to_string(LampState s) { return s == LampState::On ? "on" : "off"; }

namespace detail {
// Wraps multi-term or negative values in parentheses for inline display.
inline std::string grouped(const GrossNumber& x) {
  const std::string s = format(x);
  return (x.size() > 1 || sign(x) < 0) ? "(" + s + ")" : s;
}

inline std::string room_range(const GrossAP& rooms) {
  if (rooms.count == GrossNumber(1)) return "room " + format(rooms.first);
  return "rooms " + format(rooms.first) + ".." + format(rooms.last());
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Galileo: evens and squares against the naturals.

inline ParadoxReport galileo_report() {
  const GrossNumber g = GrossNumber::grossone();
  const GrossAP nat = naturals();
  const GrossAP even = evens();
  ParadoxReport r{"galileo", {}, {}};

  r.add("card(N)", format(cardinality(nat)), cardinality(nat) == g);
  r.add("card(E)", format(cardinality(even)), cardinality(even) == g / GrossNumber(2));
  r.add("card(E) < card(N)", format(cardinality(even)) + " < " + format(cardinality(nat)),
        cardinality(even) < cardinality(nat));

  const GrossNumber e1 = element_at(even, 1), n1 = element_at(nat, 1);
  r.add("first pair of the even bijection", format(e1) + " <-> " + format(n1), e1 == 2 && n1 == 1);
  // The n-th even number pairs with n; the last pair uses n = card(E).
  const GrossNumber e_last = element_at(even, cardinality(even));
  const GrossNumber n_last = element_at(nat, cardinality(even));
  r.add("final pair of the even bijection", format(e_last) + " <-> " + format(n_last),
        e_last == last_element(even) && e_last == g && n_last == cardinality(even) && n_last < last_element(nat));

  const RootCount squares = squares_count();
  const std::string j = format(squares);
  r.add("squares count J", j, squares.bracket_holds());
  r.add("final pair of the square bijection", j + "^2 <-> " + j,
        pow_int(squares.upper_value(), squares.degree) == g);
  r.add("J < card(N)", format(squares.upper_value()) + " < " + format(g), squares.upper_value() < g);

  r.narrative = "E has half as many elements as N and the squares count floor(G^(1/2)) is below G; "
                "the part is less than the whole.";
  return r;
}

// ---------------------------------------------------------------------------
// Set multiplication: N scaled by 2.

inline ParadoxReport multiplication_report() {
  const GrossNumber g = GrossNumber::grossone();
  const GrossAP nat = naturals();
  const GrossAP doubled = scale(nat, 2);
  ParadoxReport r{"multiplication", {}, {}};

  r.add("(i) card(E2) = card(N)", format(cardinality(doubled)) + " = " + format(cardinality(nat)),
        cardinality(doubled) == cardinality(nat) && cardinality(nat) == g);
  r.add("last(E2)", format(last_element(doubled)), last_element(doubled) == 2 * g);

  const GrossNumber probe = g + 2;
  r.add("(ii) G + 2 in E2", format(probe), member(doubled, probe));
  r.add("(ii) G + 2 not in N", format(probe), !member(nat, probe));

  const GrossAP head = GrossAP::make(2, 2, g / GrossNumber(2));
  const GrossAP tail = GrossAP::make(probe, 2, g / GrossNumber(2));
  r.add("even naturals in E2", format(head),
        head == evens() && member(doubled, head.first) && member(doubled, last_element(head)));
  r.add("(iii) elements of E2 outside N", format(cardinality(tail)),
        cardinality(tail) == g / GrossNumber(2) && tail.first > last_element(nat) &&
            last_element(tail) == last_element(doubled) &&
            cardinality(head) + cardinality(tail) == cardinality(doubled));

  r.narrative = "E2 keeps the G elements of N; G/2 of them are extended naturals beyond G.";
  return r;
}

// ---------------------------------------------------------------------------
// Hilbert's hotel with G rooms.

struct HilbertPlan {
  GrossNumber rooms;       // G
  GrossNumber newcomers;   // m
  GrossAP freed;           // rooms 1..m
  GrossAP evicted;         // guests of rooms G-m+1..G
  GrossNumber remaining;   // G - m guests shifted by m
};

inline HilbertPlan hilbert_plan(const GrossNumber& m) {
  require_gross_integer(m, "newcomer count");
  if (sign(m) <= 0) throw Error(ErrorKind::InvalidArgument, "newcomer count must be positive");
  const GrossNumber g = GrossNumber::grossone();
  if (m > g) throw Error(ErrorKind::TooManyNewcomers, "the hotel has only G rooms");
  return HilbertPlan{g, m, GrossAP::make(1, 1, m), GrossAP::make(g - m + 1, 1, m), g - m};
}

inline ParadoxReport hilbert_accommodate(const GrossNumber& m) {
  const HilbertPlan p = hilbert_plan(m);
  const GrossAP nat = naturals();
  ParadoxReport r{"hilbert", {}, {}};

  r.add("rooms", format(p.rooms), cardinality(nat) == p.rooms);
  r.add("move", "room r -> room r + " + detail::grouped(p.newcomers), true);
  r.add("freed", detail::room_range(p.freed), p.freed.first == 1 && cardinality(p.freed) == p.newcomers);
  // The first evicted guest would land beyond the last room.
  const GrossNumber target = p.evicted.first + p.newcomers;
  r.add("evicted", detail::room_range(p.evicted),
        last_element(p.evicted) == p.rooms && cardinality(p.evicted) == p.newcomers && !member(nat, target) &&
            (p.remaining.is_zero() || member(nat, p.remaining + p.newcomers)));
  r.add("conservation",
        format(p.rooms) + " = " + detail::grouped(p.remaining) + " + " + detail::grouped(cardinality(p.evicted)),
        p.remaining + cardinality(p.evicted) == p.rooms);
  r.add("occupied after", format(p.remaining + p.newcomers), p.remaining + p.newcomers == p.rooms);

  r.narrative = "Newcomers take the freed rooms; the guests shifted past room G leave the hotel.";
  return r;
}

// ---------------------------------------------------------------------------
// Thomson's lamp. The lamp holds `initial` during the first interval (1/2
// minute) and toggles at the start of each following interval, so after k
// intervals it shows the state of interval k.

struct ThomsonOutcome {
  LampState final_state;
  Parity switches_parity;
  GrossNumber elapsed;  // 1/2 + 1/4 + ... with `switches` addends
};

inline ThomsonOutcome thomson_outcome(LampState initial, const GrossNumber& switches) {
  require_gross_integer(switches, "switch count");
  if (sign(switches) <= 0) throw Error(ErrorKind::InvalidArgument, "switch count must be positive");
  const Parity p = parity(switches);
  return ThomsonOutcome{p == Parity::Odd ? initial : toggled(initial), p, geometric(Rational(1, 2), switches)};
}

inline ParadoxReport thomson_lamp(LampState initial, const GrossNumber& switches) {
  const ThomsonOutcome o = thomson_outcome(initial, switches);
  ParadoxReport r{"thomson", {}, {}};

  r.add("switches", format(switches), true);
  r.add("parity of switches", to_string(o.switches_parity), true);
  // Cross-check against Grandi's partial sum 1 - 1 + 1 - ...: the lamp shows
  // the initial state exactly when S(k) = 1.
  const bool shows_initial = grandi(switches).value == 1;
  r.add("final state", to_string(o.final_state), (o.final_state == initial) == shows_initial);
  const GrossNumber expected = 1 - exp_gross(Rational(1, 2), switches);
  r.add("elapsed time", format(o.elapsed), o.elapsed == expected);
  r.add("elapsed < 1", format(o.elapsed) + " < 1", o.elapsed < GrossNumber(1));
  if (classify(switches) == NumberClass::Infinite) {
    const GrossNumber gap = 1 - o.elapsed;
    r.add("1 - elapsed is infinitesimal", format(gap), classify(gap) == NumberClass::Infinitesimal);
  }

  r.narrative = "With an explicit number of switches the final state follows from its parity, and the "
                "switching ends infinitesimally close to, but before, one minute.";
  return r;
}

// ---------------------------------------------------------------------------
// Torricelli's rectangle, |AB| = 1, |BC| = 2, covered by segments of width h.

struct TorricelliAreas {
  GrossNumber width;          // h
  GrossNumber segments;       // K = 1/h
  GrossNumber corner_area;    // h * 2h / 2
  GrossNumber horizontal;     // S_ABC
  GrossNumber vertical;       // S_CDA
  GrossNumber last_length;    // 2 - 2hK, the rectangle part of segment K
};

inline TorricelliAreas torricelli_areas(const GrossNumber& h) {
  if (!h.is_monomial() || sign(h) <= 0 || h.leading().base != 1 || h.leading().gpow >= 0)
    throw Error(ErrorKind::NotInfinitesimalWidth, "width must be a single positive term c*G^-m with m > 0");
  const GrossNumber k = 1 / h;
  if (!is_gross_integer(k)) throw Error(ErrorKind::CountNotGrossInteger, "1/h = " + format(k) + " is not a gross-integer");

  TorricelliAreas a;
  a.width = h;
  a.segments = k;
  a.corner_area = h * (2 * h) / GrossNumber(2);
  // Horizontal segment i: rectangle h x (2 - 2hi) plus a corner triangle.
  a.horizontal = h * ap_sum(2 - 2 * h, -2 * h, k) + k * a.corner_area;
  // Vertical segment i: rectangle 2h x (1 - hi) plus a corner triangle.
  a.vertical = 2 * h * ap_sum(1 - h, -h, k) + k * a.corner_area;
  a.last_length = 2 - 2 * h * k;
  return a;
}

inline ParadoxReport torricelli(const GrossNumber& h) {
  const TorricelliAreas a = torricelli_areas(h);
  ParadoxReport r{"torricelli", {}, {}};

  r.add("segment width h", format(a.width), true);
  r.add("segments per triangle", format(a.segments), a.segments * a.width == 1);
  r.add("corner triangle area", format(a.corner_area), a.corner_area == a.width * a.width);
  r.add("segment i area", format(2 * a.width) + " - " + detail::grouped(2 * a.width * a.width) + "*i + " +
                              detail::grouped(a.width * a.width),
        a.horizontal == ap_sum(2 * a.width - a.width * a.width, -2 * a.width * a.width, a.segments));
  r.add("last rectangle length", format(a.last_length), a.last_length.is_zero());
  r.add("S_ABC", format(a.horizontal), a.horizontal == 1);
  r.add("S_CDA", format(a.vertical), a.vertical == 1);
  r.add("S_ABC = S_CDA", format(a.horizontal) + " = " + format(a.vertical), a.horizontal == a.vertical);

  r.narrative = "Counting the infinitesimal corner triangles, both coverings have area exactly 1.";
  return r;
}

}  // namespace grossone
