#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grossone/error.hpp"

namespace grossone {

enum class TokenKind {
  Int,
  Slash,
  G,
  Ident,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Cmp,
  End,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset = 0;  // byte offset into the input
};

inline const char* to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Int: return "integer";
    case TokenKind::Slash: return "'/'";
    case TokenKind::G: return "G";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Cmp: return "comparison";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

/// The grossone glyph, accepted as a synonym for G.
inline constexpr std::string_view kGrossoneGlyph = "\xE2\x91\xA0";

/// Maximal-munch tokenizer. Always ends with an End token.
inline std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto single = [&](TokenKind k) {
    out.push_back(Token{k, std::string(1, input[i]), i});
    ++i;
  };
  while (i < input.size()) {
    const unsigned char c = static_cast<unsigned char>(input[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      out.push_back(Token{TokenKind::Int, std::string(input.substr(start, i - start)), start});
    } else if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < input.size() && (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_')) ++i;
      std::string word(input.substr(start, i - start));
      out.push_back(Token{word == "G" ? TokenKind::G : TokenKind::Ident, std::move(word), start});
    } else if (input.substr(i, kGrossoneGlyph.size()) == kGrossoneGlyph) {
      out.push_back(Token{TokenKind::G, std::string(kGrossoneGlyph), i});
      i += kGrossoneGlyph.size();
    } else {
      switch (c) {
        case '+': single(TokenKind::Plus); break;
        case '-': single(TokenKind::Minus); break;
        case '*': single(TokenKind::Star); break;
        case '/': single(TokenKind::Slash); break;
        case '^': single(TokenKind::Caret); break;
        case '(': single(TokenKind::LParen); break;
        case ')': single(TokenKind::RParen); break;
        case '{': single(TokenKind::LBrace); break;
        case '}': single(TokenKind::RBrace); break;
        case ',': single(TokenKind::Comma); break;
        case '<':
        case '>':
        case '=': {
          const std::size_t start = i++;
          if (i < input.size() && input[i] == '=') ++i;
          out.push_back(Token{TokenKind::Cmp, std::string(input.substr(start, i - start)), start});
          break;
        }
        default:
          throw Error(ErrorKind::LexError, std::string("unexpected character '") + input[i] + "'", i);
      }
    }
  }
  out.push_back(Token{TokenKind::End, "", input.size()});
  return out;
}

}  // namespace grossone
