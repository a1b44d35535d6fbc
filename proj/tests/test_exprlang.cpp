#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "grossone/evaluator.hpp"

using namespace grossone;

namespace {

std::string eval_str(std::string_view src) { return print_value(evaluate(src)); }

std::vector<TokenKind> kinds(std::string_view src) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(src)) out.push_back(t.kind);
  return out;
}

// Fully parenthesized rendering of an AST, for shape checks.
std::string shape(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Literal>) return to_string(n.value);
        else if constexpr (std::is_same_v<T, ast::Grossone>) return "G";
        else if constexpr (std::is_same_v<T, ast::Name>) return n.name;
        else if constexpr (std::is_same_v<T, ast::Unary>) return "(-" + shape(*n.operand) + ")";
        else if constexpr (std::is_same_v<T, ast::Binary>)
          return "(" + shape(*n.lhs) + n.op + shape(*n.rhs) + ")";
        else if constexpr (std::is_same_v<T, ast::Compare>) return "(" + shape(*n.lhs) + "?" + shape(*n.rhs) + ")";
        else if constexpr (std::is_same_v<T, ast::Call>) {
          std::string s = n.name + "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) s += (i ? "," : "") + shape(*n.args[i]);
          return s + ")";
        } else {
          std::string s = "{";
          for (std::size_t i = 0; i < n.elems.size(); ++i) s += (i ? "," : "") + shape(*n.elems[i]);
          return s + "}";
        }
      },
      e.node);
}

std::string parsed(std::string_view src) { return shape(*parse(src)); }

void expect_error(std::string_view src, ErrorKind kind, std::optional<std::size_t> offset = {}) {
  try {
    (void)evaluate(src);
    ADD_FAILURE() << src << ": expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << src << ": " << e.what();
    if (offset) EXPECT_EQ(e.offset(), offset) << src;
  }
}

}  // namespace

TEST(Lexer, Tokens) {
  using K = TokenKind;
  EXPECT_EQ(kinds("G^2 + 1"), (std::vector<K>{K::G, K::Caret, K::Int, K::Plus, K::Int, K::End}));
  const auto toks = tokenize("card(ap(4,5))");
  ASSERT_GE(toks.size(), 4u);
  EXPECT_EQ(toks[0].kind, K::Ident);
  EXPECT_EQ(toks[0].lexeme, "card");
  EXPECT_EQ(toks[1].kind, K::LParen);
  EXPECT_EQ(toks[2].lexeme, "ap");
  EXPECT_EQ(kinds("\xE2\x91\xA0 <= {1}"), (std::vector<K>{K::G, K::Cmp, K::LBrace, K::Int, K::RBrace, K::End}));
  EXPECT_EQ(tokenize("Gx")[0].kind, K::Ident);
  EXPECT_EQ(tokenize("  7").back().offset, 3u);
}

TEST(Lexer, Errors) {
  expect_error("@", ErrorKind::LexError, 0);
  expect_error("1 + $", ErrorKind::LexError, 4);
  expect_error("\xE2\x91", ErrorKind::LexError, 0);
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parsed("2^G - 1"), "((2^G)-1)");
  EXPECT_EQ(parsed("2*G + 1"), "((2*G)+1)");
  EXPECT_EQ(parsed("-2^2"), "(-(2^2))");
  EXPECT_EQ(parsed("2^3^2"), "(2^(3^2))");
  EXPECT_EQ(parsed("G^-1 * G"), "((G^(-1))*G)");
  EXPECT_EQ(parsed("1 - 2 - 3"), "((1-2)-3)");
  EXPECT_EQ(parsed("8 / 4 / 2"), "((8/4)/2)");
  EXPECT_EQ(parsed("1 + 2 < G"), "((1+2)?G)");
  EXPECT_EQ(parsed("f()"), "f()");
  EXPECT_EQ(parsed("addf(x, {1, 2+1})"), "addf(x,{1,(2+1)})");
}

TEST(Parser, Errors) {
  try {
    (void)parse("tri(G,");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_NE(std::string(e.what()).find("expected expression"), std::string::npos);
  }
  expect_error("", ErrorKind::ParseError, 0);
  expect_error("1 2", ErrorKind::ParseError, 2);
  expect_error("(1", ErrorKind::ParseError, 2);
  expect_error("1 < 2 < 3", ErrorKind::ParseError, 6);
  expect_error("1 =< 2", ErrorKind::ParseError);
  expect_error(std::string(600, '(') + "1" + std::string(600, ')'), ErrorKind::ParseError);
  expect_error(std::string(600, '-') + "1", ErrorKind::ParseError);
  EXPECT_EQ(eval_str(std::string(100, '(') + "1" + std::string(100, ')')), "1");
}

TEST(Evaluator, Identities) {
  EXPECT_EQ(eval_str("0*G"), "0");
  EXPECT_EQ(eval_str("G-G"), "0");
  EXPECT_EQ(eval_str("G/G"), "1");
  EXPECT_EQ(eval_str("G^0"), "1");
  EXPECT_EQ(eval_str("G^-1 * G"), "1");
  EXPECT_EQ(eval_str("1^G"), "1");
  EXPECT_EQ(eval_str("0^G"), "0");
  EXPECT_EQ(eval_str("\xE2\x91\xA0 + 1"), "G + 1");
}

TEST(Evaluator, Powers) {
  EXPECT_EQ(eval_str("2^G - 1"), "2^G - 1");
  EXPECT_EQ(eval_str("2^(3*G)"), "8^G");
  EXPECT_EQ(eval_str("(1/2)^G"), "(1/2)^G");
  EXPECT_EQ(eval_str("4^(G+1)"), "4*4^G");
  EXPECT_EQ(eval_str("G^(1/2)"), "G^(1/2)");
  EXPECT_EQ(eval_str("(4*G^2)^(3/2)"), "8*G^3");
  EXPECT_EQ(eval_str("(G+1)^2"), "G^2 + 2*G + 1");
  EXPECT_EQ(eval_str("2^-2"), "1/4");
  expect_error("G^G", ErrorKind::TypeError, 1);
  expect_error("(-2)^G", ErrorKind::TypeError);
  expect_error("2^(G^2)", ErrorKind::ExponentNotLinearInGrossone);
  expect_error("(G+1)^-1", ErrorKind::NegativePowerOfSum);
  expect_error("(G+1)^100000", ErrorKind::InvalidArgument);
  expect_error("2^100000000000", ErrorKind::InvalidArgument);
  expect_error("(2*G)^(1/2)", ErrorKind::CoefficientNotPerfectPower);
  expect_error("0^0", ErrorKind::ZeroToZero);
  expect_error("1/0", ErrorKind::DivisionByZero);
  expect_error("(G+1)/(G-1)", ErrorKind::NotExactlyDivisible);
}

TEST(Evaluator, Sets) {
  EXPECT_EQ(eval_str("card(intersect(ap(4, 5), ap(3, 11)))"), "(1/55)*G");
  EXPECT_EQ(eval_str("intersect(ap(4,5), ap(3,11))"), "AP(first=14, step=55, count=(1/55)*G)");
  EXPECT_EQ(eval_str("intersect(ap(1,2), ap(2,2))"), "Empty");
  EXPECT_EQ(eval_str("card(intersect(ap(1,2), ap(2,2)))"), "0");
  EXPECT_EQ(eval_str("card(ap(2,2))"), "(1/2)*G");
  EXPECT_EQ(eval_str("card(remf(ap(1,3),{7}))"), "(1/3)*G - 1");
  EXPECT_EQ(eval_str("card(remf(ap(1,3), 7, 10))"), "(1/3)*G - 2");
  EXPECT_EQ(eval_str("card(addf(intersect(ap(4,5),ap(3,11)),{3,4,5}))"), "(1/55)*G + 3");
  EXPECT_EQ(eval_str("card(ints())"), "2*G + 1");
  EXPECT_EQ(eval_str("couples(nat(),nat())"), "G^2");
  EXPECT_EQ(eval_str("couples(evens(), odds())"), "(1/4)*G^2");
  EXPECT_EQ(eval_str("last(ap(14,55))"), "G - 41");
  EXPECT_EQ(eval_str("at(nat(), G/2)"), "(1/2)*G");
  EXPECT_EQ(eval_str("member(ap(14,55), 69)"), "true");
  EXPECT_EQ(eval_str("member(scale(nat(), 2), G + 2)"), "true");
  EXPECT_EQ(eval_str("squares()"), "floor(G^(1/2))");
  EXPECT_EQ(eval_str("{3, 1}"), "Empty + {1,3}");
  expect_error("ap(0, 3)", ErrorKind::ResidueOutOfRange);
  expect_error("addf(ap(14,55), 69)", ErrorKind::ElementAlreadyPresent);
  expect_error("intersect(ints(), nat())", ErrorKind::GrossFirstUnsupported);
  expect_error("last(remf(nat(), 1))", ErrorKind::TypeError);
  expect_error("{G}", ErrorKind::TypeError);
}

TEST(Evaluator, Series) {
  EXPECT_EQ(eval_str("x2(G)"), "2^G - 1");
  EXPECT_EQ(eval_str("x2(3*G)"), "8^G - 1");
  EXPECT_EQ(eval_str("grandi(G)"), "0");
  EXPECT_EQ(eval_str("grandi(G-1)"), "1");
  EXPECT_EQ(eval_str("grandirr(2*G)"), "0");
  EXPECT_EQ(eval_str("tri(G)"), "(1/2)*G^2 + (1/2)*G");
  EXPECT_EQ(eval_str("geo(1/2, G)"), "1 - (1/2)^G");
  EXPECT_EQ(eval_str("tsum(2*G)"), "2*G^-1");
  EXPECT_EQ(eval_str("tsum(3*G^2)"), "3");
  EXPECT_EQ(eval_str("tsum(4*G^3)"), "4*G");
  EXPECT_EQ(eval_str("ramanujan()"),
            "-3c(n) = -(3/2)*G^2 - (3/2)*G\ngrouped = -(3/2)*G^2 - (3/2)*G\nconsistent: true");
  expect_error("grandirr(G-1)", ErrorKind::OddLength);
  expect_error("geo(1, G)", ErrorKind::UnitRatio);
}

TEST(Evaluator, Classification) {
  EXPECT_EQ(eval_str("parity(G-1)"), "odd");
  EXPECT_EQ(eval_str("parity(G/55 + 3)"), "odd");
  EXPECT_EQ(eval_str("class(2*G^-1)"), "infinitesimal");
  EXPECT_EQ(eval_str("class(3)"), "finite");
  EXPECT_EQ(eval_str("class(1 - (1/2)^G)"), "finite+infinitesimal");
  EXPECT_EQ(eval_str("class(G)"), "infinite");
  EXPECT_EQ(eval_str("class(0)"), "zero");
  EXPECT_EQ(eval_str("evalat(2^G - 1, 10)"), "1023");
  EXPECT_EQ(eval_str("root(4*G^2, 2)"), "2*G");
  EXPECT_EQ(eval_str("G^(1/2) < G"), "true");
  EXPECT_EQ(eval_str("2^G > G^100"), "true");
  EXPECT_EQ(eval_str("G = G"), "true");
  EXPECT_EQ(eval_str("G == G + 1"), "false");
  EXPECT_EQ(eval_str("7 >= G"), "false");
  EXPECT_EQ(eval_str("G - 1 <= G"), "true");
  expect_error("evalat(G^(1/2), 100)", ErrorKind::FractionalGrossPower);
}

TEST(Evaluator, Reports) {
  EXPECT_EQ(std::get<ParadoxReport>(evaluate("galileo()")).name, "galileo");
  EXPECT_TRUE(std::get<ParadoxReport>(evaluate("multiplication()")).resolved());
  EXPECT_TRUE(std::get<ParadoxReport>(evaluate("hotel(G)")).resolved());
  EXPECT_TRUE(std::get<ParadoxReport>(evaluate("lamp(off, G)")).resolved());
  EXPECT_TRUE(std::get<ParadoxReport>(evaluate("torricelli(G^-3)")).resolved());
  EXPECT_NE(eval_str("lamp(on, G)").find("[ok] final state: off"), std::string::npos);
  expect_error("lamp(1, G)", ErrorKind::TypeError);
  expect_error("hotel(G + 1)", ErrorKind::TooManyNewcomers);
}

TEST(Evaluator, TypeAndNameErrors) {
  expect_error("foo(1)", ErrorKind::UnknownBuiltin, 0);
  expect_error("1 + bar", ErrorKind::UnknownBuiltin, 4);
  expect_error("tri()", ErrorKind::TypeError);
  expect_error("tri(1, 2)", ErrorKind::TypeError);
  expect_error("card(1)", ErrorKind::TypeError);
  expect_error("nat() + 1", ErrorKind::TypeError);
  expect_error("-nat()", ErrorKind::TypeError);
  expect_error("(1 < 2) < 3", ErrorKind::TypeError);
  expect_error("ap(G, 2)", ErrorKind::TypeError);
  expect_error("ap(1/2, 2)", ErrorKind::TypeError);
  expect_error("root(G, 0)", ErrorKind::TypeError);
  expect_error("on + 1", ErrorKind::TypeError);
  EXPECT_EQ(eval_str("off"), "off");
}

TEST(Evaluator, JsonValues) {
  EXPECT_EQ(value_to_json(evaluate("2*G + 1")).dump(), R"({"type":"number","value":"2*G + 1"})");
  EXPECT_EQ(value_to_json(evaluate("member(nat(), 3)")).dump(), R"({"type":"boolean","value":true})");
  EXPECT_EQ(value_to_json(evaluate("parity(G)")).dump(), R"({"type":"parity","value":"even"})");
  EXPECT_EQ(value_to_json(evaluate("ramanujan()"))["value"]["consistent"], true);
  EXPECT_EQ(value_to_json(evaluate("hotel(1)"))["value"]["resolved"], true);
}
