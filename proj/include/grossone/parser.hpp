#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/lexer.hpp"
#include "grossone/rational.hpp"

namespace grossone {

enum class CmpOp { Less, LessEqual, Equal, GreaterEqual, Greater };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

namespace ast {
struct Literal { Rational value; };
struct Grossone {};
struct Name { std::string name; };
struct Unary { ExprPtr operand; };  // negation
struct Binary {
  char op;  // one of + - * / ^
  ExprPtr lhs, rhs;
};
struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};
struct Compare {
  CmpOp op;
  ExprPtr lhs, rhs;
};
struct SetLiteral { std::vector<ExprPtr> elems; };
}  // namespace ast

struct Expr {
  using Node = std::variant<ast::Literal, ast::Grossone, ast::Name, ast::Unary, ast::Binary, ast::Call, ast::Compare,
                            ast::SetLiteral>;
  Node node;
  std::size_t offset = 0;
};

namespace detail {

// comparison < additive < multiplicative < unary minus < power < call/atom.
// Power is right-associative and its exponent may carry a unary minus.
class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  ExprPtr parse_input() {
    ExprPtr e = comparison();
    if (peek().kind != TokenKind::End) fail("end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }
  void expect(TokenKind k) {
    if (!accept(k)) fail(to_string(k));
  }
  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'";
    throw Error(ErrorKind::ParseError, "expected " + expected + ", found " + found, t.offset);
  }

  static ExprPtr make(Expr::Node node, std::size_t offset) {
    return std::make_unique<Expr>(Expr{std::move(node), offset});
  }

  ExprPtr comparison() {
    const DepthGuard guard(*this, peek().offset);
    ExprPtr lhs = additive();
    if (peek().kind != TokenKind::Cmp) return lhs;
    const Token op = advance();
    ExprPtr rhs = additive();
    CmpOp cmp = CmpOp::Equal;
    if (op.lexeme == "<") cmp = CmpOp::Less;
    else if (op.lexeme == "<=") cmp = CmpOp::LessEqual;
    else if (op.lexeme == ">=") cmp = CmpOp::GreaterEqual;
    else if (op.lexeme == ">") cmp = CmpOp::Greater;
    else if (op.lexeme != "=" && op.lexeme != "==")
      throw Error(ErrorKind::ParseError, "unknown comparison '" + op.lexeme + "'", op.offset);
    return make(ast::Compare{cmp, std::move(lhs), std::move(rhs)}, op.offset);
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token op = advance();
      lhs = make(ast::Binary{op.lexeme[0], std::move(lhs), multiplicative()}, op.offset);
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
      const Token op = advance();
      lhs = make(ast::Binary{op.lexeme[0], std::move(lhs), unary()}, op.offset);
    }
    return lhs;
  }

  ExprPtr unary() {
    const DepthGuard guard(*this, peek().offset);
    if (peek().kind == TokenKind::Minus) {
      const std::size_t at = advance().offset;
      return make(ast::Unary{unary()}, at);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != TokenKind::Caret) return base;
    const std::size_t at = advance().offset;
    return make(ast::Binary{'^', std::move(base), unary()}, at);
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Int: {
        const Token tok = advance();
        return make(ast::Literal{Rational(Integer(tok.lexeme))}, tok.offset);
      }
      case TokenKind::G: return make(ast::Grossone{}, advance().offset);
      case TokenKind::Ident: {
        const Token name = advance();
        if (!accept(TokenKind::LParen)) return make(ast::Name{name.lexeme}, name.offset);
        ast::Call call{name.lexeme, {}};
        if (!accept(TokenKind::RParen)) {
          do call.args.push_back(comparison());
          while (accept(TokenKind::Comma));
          expect(TokenKind::RParen);
        }
        return make(std::move(call), name.offset);
      }
      case TokenKind::LParen: {
        advance();
        ExprPtr inner = comparison();
        expect(TokenKind::RParen);
        return inner;
      }
      case TokenKind::LBrace: {
        const std::size_t at = advance().offset;
        ast::SetLiteral set;
        if (!accept(TokenKind::RBrace)) {
          do set.elems.push_back(additive());
          while (accept(TokenKind::Comma));
          expect(TokenKind::RBrace);
        }
        return make(std::move(set), at);
      }
      default: fail("expression");
    }
  }

  struct DepthGuard {
    DepthGuard(Parser& p, std::size_t offset) : parser(p) {
      if (++parser.depth_ > kMaxDepth) throw Error(ErrorKind::ParseError, "expression nested too deeply", offset);
    }
    ~DepthGuard() { --parser.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& parser;
  };

  static constexpr std::size_t kMaxDepth = 512;

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::End)
    throw Error(ErrorKind::ParseError, "token stream must end with an End token", 0);
  return detail::Parser(tokens).parse_input();
}

inline ExprPtr parse(std::string_view input) {
  const auto tokens = tokenize(input);
  return parse(std::span<const Token>(tokens));
}

}  // namespace grossone
