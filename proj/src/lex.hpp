#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dex/error.hpp"

namespace dex::lex {

enum class Tok {
  Ident,    // names, keywords, and the bare digit token "0"
  LBrack,   // [
  RBrack,   // ]
  LParen,   // (
  RParen,   // )
  LBrace,   // {
  RBrace,   // }
  Comma,    // ,
  Dot,      // .
  Pipe,     // |
  Plus,     // +
  Colon,    // :
  At,       // @
  Equal,    // =
  EqEq,     // ==
  TildeTilde,  // ~~
  Arrow,    // ->
  FatArrow, // =>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

// Tokenizes one logical line ('#' starts a comment). Identifiers may contain
// '-' when followed by an alphanumeric, so proof-rule names lex as single
// tokens while "B -> B" still yields an arrow.
std::vector<Token> line_tokens(std::string_view line, int line_no);

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& get();
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view text) const {
    return peek().kind == Tok::Ident && peek().text == text;
  }
  bool accept(Tok k);
  Token expect(Tok k, const std::string& what);
  std::string expect_ident(const std::string& what);
  [[noreturn]] void fail(const std::string& msg) const;
  bool done() const { return peek().kind == Tok::End; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace dex::lex
