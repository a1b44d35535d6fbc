#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/paradoxes.hpp"
#include "grossone/parser.hpp"
#include "grossone/render.hpp"
#include "grossone/series.hpp"
#include "grossone/set_algebra.hpp"

namespace grossone {

/// Result of evaluating one expression. Sets are GrossAP (plain progression)
/// or AdjustedSet (progression or nothing, plus finite adjustments).
using Value = std::variant<GrossNumber, GrossAP, AdjustedSet, Parity, bool, ParadoxReport, RootCount, NumberClass,
                           LampState, RamanujanAudit>;

inline const char* type_name(const Value& v) {
  static constexpr const char* names[] = {"number", "set", "set", "parity", "boolean",
                                          "report", "rootcount", "class", "lamp", "audit"};
  return names[v.index()];
}

namespace detail {

using Args = std::span<const Value>;

[[noreturn]] inline void type_error(std::string_view builtin, std::size_t position, std::string_view expected,
                                    const Value& got) {
  throw Error(ErrorKind::TypeError, std::string(builtin) + ": argument " + std::to_string(position + 1) +
                                        " must be " + std::string(expected) + ", got " + type_name(got));
}

inline void arity(std::string_view builtin, Args args, std::size_t n) {
  if (args.size() != n)
    throw Error(ErrorKind::TypeError, std::string(builtin) + " expects " + std::to_string(n) + " argument" +
                                          (n == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
}

inline const GrossNumber& number_arg(std::string_view b, Args args, std::size_t i) {
  if (const auto* n = std::get_if<GrossNumber>(&args[i])) return *n;
  type_error(b, i, "a number", args[i]);
}

inline Rational rational_arg(std::string_view b, Args args, std::size_t i) {
  const auto r = number_arg(b, args, i).as_rational();
  if (!r) type_error(b, i, "a finite rational", args[i]);
  return *r;
}

inline Integer int_arg(std::string_view b, Args args, std::size_t i) {
  const Rational r = rational_arg(b, args, i);
  if (!is_integer(r)) type_error(b, i, "a finite integer", args[i]);
  return numerator_of(r);
}

inline GrossAP ap_arg(std::string_view b, Args args, std::size_t i) {
  if (const auto* ap = std::get_if<GrossAP>(&args[i])) return *ap;
  if (const auto* s = std::get_if<AdjustedSet>(&args[i]); s && s->is_plain() && s->base) return *s->base;
  type_error(b, i, "a progression", args[i]);
}

inline AdjustedSet set_arg(std::string_view b, Args args, std::size_t i) {
  if (const auto* ap = std::get_if<GrossAP>(&args[i])) return AdjustedSet(*ap);
  if (const auto* s = std::get_if<AdjustedSet>(&args[i])) return *s;
  type_error(b, i, "a set", args[i]);
}

// Trailing arguments of addf/remf: finite integers or set literals.
inline std::vector<Integer> element_args(std::string_view b, Args args, std::size_t from) {
  std::vector<Integer> out;
  for (std::size_t i = from; i < args.size(); ++i) {
    if (const auto* s = std::get_if<AdjustedSet>(&args[i]); s && !s->base && s->removed.empty()) {
      out.insert(out.end(), s->added.begin(), s->added.end());
    } else {
      out.push_back(int_arg(b, args, i));
    }
  }
  return out;
}

inline unsigned small_arg(std::string_view b, Args args, std::size_t i) {
  const Integer v = int_arg(b, args, i);
  if (v < 1 || v > 4096) type_error(b, i, "an integer in 1..4096", args[i]);
  return v.convert_to<unsigned>();
}

using Builtin = std::function<Value(Args)>;

inline Value set_or_empty(const std::optional<GrossAP>& ap) {
  if (ap) return *ap;
  return AdjustedSet();
}

inline const std::map<std::string, Builtin, std::less<>>& builtins() {
  static const std::map<std::string, Builtin, std::less<>> table = {
      {"ap", [](Args a) -> Value { arity("ap", a, 2); return ap_nat(int_arg("ap", a, 0), int_arg("ap", a, 1)); }},
      {"nat", [](Args a) -> Value { arity("nat", a, 0); return naturals(); }},
      {"evens", [](Args a) -> Value { arity("evens", a, 0); return evens(); }},
      {"odds", [](Args a) -> Value { arity("odds", a, 0); return odds(); }},
      {"ints", [](Args a) -> Value { arity("ints", a, 0); return integers_set(); }},
      {"card", [](Args a) -> Value { arity("card", a, 1); return cardinality(set_arg("card", a, 0)); }},
      {"last", [](Args a) -> Value { arity("last", a, 1); return last_element(ap_arg("last", a, 0)); }},
      {"at", [](Args a) -> Value { arity("at", a, 2); return element_at(ap_arg("at", a, 0), number_arg("at", a, 1)); }},
      {"member",
       [](Args a) -> Value { arity("member", a, 2); return member(set_arg("member", a, 0), number_arg("member", a, 1)); }},
      {"intersect",
       [](Args a) -> Value {
         arity("intersect", a, 2);
         return set_or_empty(intersect(ap_arg("intersect", a, 0), ap_arg("intersect", a, 1)));
       }},
      {"scale", [](Args a) -> Value { arity("scale", a, 2); return scale(ap_arg("scale", a, 0), int_arg("scale", a, 1)); }},
      {"addf",
       [](Args a) -> Value {
         if (a.empty()) arity("addf", a, 1);
         return add_finite(set_arg("addf", a, 0), element_args("addf", a, 1));
       }},
      {"remf",
       [](Args a) -> Value {
         if (a.empty()) arity("remf", a, 1);
         return remove_finite(set_arg("remf", a, 0), element_args("remf", a, 1));
       }},
      {"couples",
       [](Args a) -> Value { arity("couples", a, 2); return couples_count(set_arg("couples", a, 0), set_arg("couples", a, 1)); }},
      {"squares", [](Args a) -> Value { arity("squares", a, 0); return squares_count(); }},
      {"tri", [](Args a) -> Value { arity("tri", a, 1); return triangular(number_arg("tri", a, 0)); }},
      {"geo", [](Args a) -> Value { arity("geo", a, 2); return geometric(rational_arg("geo", a, 0), number_arg("geo", a, 1)); }},
      {"x2", [](Args a) -> Value { arity("x2", a, 1); return powers_of_two_sum(number_arg("x2", a, 0)); }},
      {"grandi", [](Args a) -> Value { arity("grandi", a, 1); return GrossNumber(grandi(number_arg("grandi", a, 0)).value); }},
      {"grandirr",
       [](Args a) -> Value { arity("grandirr", a, 1); return grandi_rearranged(number_arg("grandirr", a, 0)).total; }},
      {"ramanujan",
       [](Args a) -> Value {
         if (a.empty()) return ramanujan_audit();
         arity("ramanujan", a, 1);
         return ramanujan_audit(number_arg("ramanujan", a, 0));
       }},
      {"tsum", [](Args a) -> Value { arity("tsum", a, 1); return infinitesimal_sum(number_arg("tsum", a, 0)); }},
      {"parity", [](Args a) -> Value { arity("parity", a, 1); return parity(number_arg("parity", a, 0)); }},
      {"class", [](Args a) -> Value { arity("class", a, 1); return classify(number_arg("class", a, 0)); }},
      {"evalat",
       [](Args a) -> Value {
         arity("evalat", a, 2);
         return GrossNumber(eval_at(number_arg("evalat", a, 0), int_arg("evalat", a, 1)));
       }},
      {"root", [](Args a) -> Value { arity("root", a, 2); return nth_root(number_arg("root", a, 0), small_arg("root", a, 1)); }},
      {"hotel", [](Args a) -> Value { arity("hotel", a, 1); return hilbert_accommodate(number_arg("hotel", a, 0)); }},
      {"lamp",
       [](Args a) -> Value {
         arity("lamp", a, 2);
         const auto* init = std::get_if<LampState>(&a[0]);
         if (!init) type_error("lamp", 0, "on or off", a[0]);
         return thomson_lamp(*init, number_arg("lamp", a, 1));
       }},
      {"torricelli", [](Args a) -> Value { arity("torricelli", a, 1); return torricelli(number_arg("torricelli", a, 0)); }},
      {"galileo", [](Args a) -> Value { arity("galileo", a, 0); return galileo_report(); }},
      {"multiplication", [](Args a) -> Value { arity("multiplication", a, 0); return multiplication_report(); }},
  };
  return table;
}

// Exponents of multi-term bases are capped to keep expansion sizes sane.
inline constexpr std::int64_t kMaxSumExponent = 4096;

inline GrossNumber raise(const GrossNumber& base, const GrossNumber& exponent, std::size_t offset) {
  if (const auto e = exponent.as_rational()) {
    const std::int64_t p = to_int64(numerator_of(*e), "exponent");
    if (!base.is_monomial() && (p > kMaxSumExponent || p < -kMaxSumExponent))
      throw Error(ErrorKind::InvalidArgument, "exponent too large for a multi-term base");
    if (is_integer(*e)) return pow_int(base, p);
    const Integer q = denominator_of(*e);
    if (q > 4096) throw Error(ErrorKind::InvalidArgument, "root degree too large");
    return pow_int(nth_root(base, q.convert_to<unsigned>()), p);
  }
  const auto b = base.as_rational();
  if (!b || *b < 0)
    throw Error(ErrorKind::TypeError,
                "'^': a power with G in the exponent needs a nonnegative rational base, got " + format(base), offset);
  return exp_gross(*b, exponent);
}

struct Evaluator {
  Value operator()(const Expr& e) const {
    return std::visit([&](const auto& node) { return eval(node, e.offset); }, e.node);
  }

  static GrossNumber as_number(const Value& v, std::string_view context, std::size_t offset) {
    if (const auto* n = std::get_if<GrossNumber>(&v)) return *n;
    throw Error(ErrorKind::TypeError, std::string(context) + " needs numbers, got " + type_name(v), offset);
  }

  Value eval(const ast::Literal& n, std::size_t) const { return GrossNumber(n.value); }
  Value eval(const ast::Grossone&, std::size_t) const { return GrossNumber::grossone(); }

  Value eval(const ast::Name& n, std::size_t offset) const {
    if (n.name == "on") return LampState::On;
    if (n.name == "off") return LampState::Off;
    throw Error(ErrorKind::UnknownBuiltin, "unknown name '" + n.name + "'", offset);
  }

  Value eval(const ast::Unary& u, std::size_t offset) const {
    return -as_number((*this)(*u.operand), "unary '-'", offset);
  }

  Value eval(const ast::Binary& b, std::size_t offset) const {
    const std::string ctx = std::string("'") + b.op + "'";
    const GrossNumber lhs = as_number((*this)(*b.lhs), ctx, offset);
    const GrossNumber rhs = as_number((*this)(*b.rhs), ctx, offset);
    switch (b.op) {
      case '+': return lhs + rhs;
      case '-': return lhs - rhs;
      case '*': return lhs * rhs;
      case '/': return div_exact(lhs, rhs);
      default: return raise(lhs, rhs, offset);
    }
  }

  Value eval(const ast::Compare& c, std::size_t offset) const {
    const GrossNumber lhs = as_number((*this)(*c.lhs), "comparison", offset);
    const GrossNumber rhs = as_number((*this)(*c.rhs), "comparison", offset);
    const auto o = compare(lhs, rhs);
    switch (c.op) {
      case CmpOp::Less: return o < 0;
      case CmpOp::LessEqual: return o <= 0;
      case CmpOp::Equal: return o == 0;
      case CmpOp::GreaterEqual: return o >= 0;
      case CmpOp::Greater: return o > 0;
    }
    return false;
  }

  Value eval(const ast::SetLiteral& s, std::size_t offset) const {
    std::vector<Integer> elems;
    for (const auto& e : s.elems) {
      const auto r = as_number((*this)(*e), "set literal", offset).as_rational();
      if (!r || !is_integer(*r))
        throw Error(ErrorKind::TypeError, "set literal elements must be finite integers", e->offset);
      elems.push_back(numerator_of(*r));
    }
    return add_finite(AdjustedSet(), elems);
  }

  Value eval(const ast::Call& c, std::size_t offset) const {
    const auto& table = builtins();
    const auto it = table.find(c.name);
    if (it == table.end()) throw Error(ErrorKind::UnknownBuiltin, "unknown function '" + c.name + "'", offset);
    std::vector<Value> args;
    args.reserve(c.args.size());
    for (const auto& a : c.args) args.push_back((*this)(*a));
    return it->second(args);
  }
};

}  // namespace detail

/// Evaluates a parsed expression. Holds no state between calls.
inline Value evaluate(const Expr& e) { return detail::Evaluator{}(e); }

inline Value evaluate(std::string_view source) { return evaluate(*parse(source)); }

/// Deterministic text form: canonical numbers, set display format, and the
/// multi-line report layout.
inline std::string print_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>)
          return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, ParadoxReport> || std::is_same_v<T, RamanujanAudit>)
          return render_text(x);
        else if constexpr (std::is_same_v<T, Parity> || std::is_same_v<T, NumberClass> || std::is_same_v<T, LampState>)
          return to_string(x);
        else
          return format(x);
      },
      v);
}

/// {"type": ..., "value": ...}; reports and audits embed their JSON objects.
inline nlohmann::json value_to_json(const Value& v) {
  nlohmann::json j;
  j["type"] = type_name(v);
  if (const auto* b = std::get_if<bool>(&v))
    j["value"] = *b;
  else if (const auto* r = std::get_if<ParadoxReport>(&v))
    j["value"] = to_json(*r);
  else if (const auto* a = std::get_if<RamanujanAudit>(&v))
    j["value"] = to_json(*a);
  else
    j["value"] = print_value(v);
  return j;
}

}  // namespace grossone
