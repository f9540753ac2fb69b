#include "lex.hpp"

#include <cctype>

namespace dex::lex {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         std::isdigit(static_cast<unsigned char>(c));
}

bool ident_body(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> line_tokens(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t col) {
    out.push_back(Token{k, std::move(text), line_no, static_cast<int>(col) + 1});
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      ++i;
      while (i < line.size() &&
             (ident_body(line[i]) ||
              (line[i] == '-' && i + 1 < line.size() && ident_body(line[i + 1]))))
        ++i;
      push(Tok::Ident, std::string(line.substr(start, i - start)), start);
      continue;
    }
    switch (c) {
      case '[': push(Tok::LBrack, "[", start); ++i; break;
      case ']': push(Tok::RBrack, "]", start); ++i; break;
      case '(': push(Tok::LParen, "(", start); ++i; break;
      case ')': push(Tok::RParen, ")", start); ++i; break;
      case '{': push(Tok::LBrace, "{", start); ++i; break;
      case '}': push(Tok::RBrace, "}", start); ++i; break;
      case ',': push(Tok::Comma, ",", start); ++i; break;
      case '.': push(Tok::Dot, ".", start); ++i; break;
      case '|': push(Tok::Pipe, "|", start); ++i; break;
      case '+': push(Tok::Plus, "+", start); ++i; break;
      case ':': push(Tok::Colon, ":", start); ++i; break;
      case '@': push(Tok::At, "@", start); ++i; break;
      case '=':
        if (i + 1 < line.size() && line[i + 1] == '=') {
          push(Tok::EqEq, "==", start);
          i += 2;
        } else if (i + 1 < line.size() && line[i + 1] == '>') {
          push(Tok::FatArrow, "=>", start);
          i += 2;
        } else {
          push(Tok::Equal, "=", start);
          ++i;
        }
        break;
      case '~':
        if (i + 1 < line.size() && line[i + 1] == '~') {
          push(Tok::TildeTilde, "~~", start);
          i += 2;
        } else {
          throw ParseError("stray '~'", line_no, static_cast<int>(start) + 1);
        }
        break;
      case '-':
        if (i + 1 < line.size() && line[i + 1] == '>') {
          push(Tok::Arrow, "->", start);
          i += 2;
        } else {
          throw ParseError("stray '-'", line_no, static_cast<int>(start) + 1);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_no, static_cast<int>(start) + 1);
    }
  }
  out.push_back(Token{Tok::End, "", line_no,
                      static_cast<int>(line.size()) + 1});
  return out;
}

const Token& Cursor::get() {
  const Token& t = toks_[pos_];
  if (t.kind != Tok::End) ++pos_;
  return t;
}

bool Cursor::accept(Tok k) {
  if (!at(k)) return false;
  get();
  return true;
}

Token Cursor::expect(Tok k, const std::string& what) {
  if (!at(k)) fail("expected " + what);
  return get();
}

std::string Cursor::expect_ident(const std::string& what) {
  if (!at(Tok::Ident)) fail("expected " + what);
  return get().text;
}

void Cursor::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string got = t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
  throw ParseError(msg + ", got " + got, t.line, t.col);
}

}  // namespace dex::lex
