#include <sstream>
#include <string>
#include <unordered_set>

#include "dex/decoration.hpp"
#include "dex/error.hpp"
#include "dex/signature.hpp"
#include "dex/term.hpp"
#include "dex/ty.hpp"
#include "lex.hpp"
#include "parse_internal.hpp"

namespace dex {

namespace {

using lex::Cursor;
using lex::Tok;

const std::unordered_set<std::string> kKeywords = {
    "id",  "tag", "untag", "empty", "down",  "ccot", "dcot",
    "inl", "inr", "scot",  "throw", "try",   "catch"};

Ty parse_ty_expr(Cursor& c);

Ty parse_ty_atom(Cursor& c) {
  if (c.accept(Tok::LParen)) {
    Ty t = parse_ty_expr(c);
    c.expect(Tok::RParen, "')'");
    return t;
  }
  std::string name = c.expect_ident("a type");
  if (name == "0") return Ty::empty();
  if (name == "P" && c.accept(Tok::LBrack)) {
    std::string exc = c.expect_ident("an exception name");
    c.expect(Tok::RBrack, "']'");
    return Ty::param(exc);
  }
  return Ty::base(name);
}

Ty parse_ty_expr(Cursor& c) {
  Ty t = parse_ty_atom(c);
  while (c.accept(Tok::Plus)) t = Ty::sum(std::move(t), parse_ty_atom(c));
  return t;
}

TermPtr parse_compose(const Signature& sig, Cursor& c);

Arms parse_arms(const Signature& sig, Cursor& c) {
  Arms arms;
  c.expect(Tok::LBrace, "'{'");
  do {
    std::string index = c.expect_ident("an exception name");
    c.expect(Tok::FatArrow, "'=>'");
    arms.emplace_back(std::move(index), parse_compose(sig, c));
  } while (c.accept(Tok::Comma));
  c.expect(Tok::RBrace, "'}'");
  return arms;
}

// Puts a constitutive family into declaration order so structural equality
// does not depend on how the file listed it.
Arms normalize_family(const Signature& sig, Arms arms) {
  Arms out;
  for (const auto& exc : sig.exceptions)
    for (auto& [index, component] : arms)
      if (index == exc.name) out.emplace_back(index, component);
  // unknown or duplicate indices survive in source order for typecheck to report
  if (out.size() != arms.size()) return arms;
  return out;
}

TermPtr parse_atom(const Signature& sig, Cursor& c) {
  if (c.accept(Tok::LParen)) {
    TermPtr t = parse_compose(sig, c);
    c.expect(Tok::RParen, "')'");
    return t;
  }
  const lex::Token& tok = c.peek();
  std::string head = c.expect_ident("a term");
  if (head == "id") {
    c.expect(Tok::LBrack, "'['");
    Ty t = parse_ty_expr(c);
    c.expect(Tok::RBrack, "']'");
    return Term::id(std::move(t));
  }
  if (head == "tag" || head == "untag") {
    c.expect(Tok::LBrack, "'['");
    std::string exc = c.expect_ident("an exception name");
    c.expect(Tok::RBrack, "']'");
    return head == "tag" ? Term::tag(exc) : Term::untag(exc);
  }
  if (head == "empty") {
    c.expect(Tok::LBrack, "'['");
    Ty t = parse_ty_expr(c);
    c.expect(Tok::RBrack, "']'");
    return Term::empty_map(std::move(t));
  }
  if (head == "down") {
    c.expect(Tok::LParen, "'('");
    TermPtr k = parse_compose(sig, c);
    c.expect(Tok::RParen, "')'");
    return Term::downcast(std::move(k));
  }
  if (head == "ccot") return Term::ccotuple(normalize_family(sig, parse_arms(sig, c)));
  if (head == "dcot" || head == "scot") {
    c.expect(Tok::LParen, "'('");
    TermPtr a = parse_compose(sig, c);
    c.expect(Tok::Pipe, "'|'");
    TermPtr b = parse_compose(sig, c);
    c.expect(Tok::RParen, "')'");
    return head == "dcot" ? Term::dcotuple(std::move(a), std::move(b))
                          : Term::scotuple(std::move(a), std::move(b));
  }
  if (head == "inl" || head == "inr") {
    c.expect(Tok::LBrack, "'['");
    Ty a = parse_ty_expr(c);
    c.expect(Tok::Comma, "','");
    Ty b = parse_ty_expr(c);
    c.expect(Tok::RBrack, "']'");
    return head == "inl" ? Term::inl(std::move(a), std::move(b))
                         : Term::inr(std::move(a), std::move(b));
  }
  if (head == "throw") {
    c.expect(Tok::LBrack, "'['");
    std::string exc = c.expect_ident("an exception name");
    c.expect(Tok::Comma, "','");
    Ty t = parse_ty_expr(c);
    c.expect(Tok::RBrack, "']'");
    return Term::throw_(std::move(exc), std::move(t));
  }
  if (head == "try") {
    TermPtr body = parse_compose(sig, c);
    if (!c.at_ident("catch")) c.fail("expected 'catch'");
    c.get();
    return Term::try_(std::move(body), parse_arms(sig, c));
  }
  if (head == "catch" || kKeywords.count(head))
    throw ParseError("misplaced keyword '" + head + "'", tok.line, tok.col);
  if (sig.find_op(head)) return Term::op(head);
  if (const NamedTerm* nt = sig.find_term(head)) return nt->term;
  throw ParseError("unknown op or term: " + head, tok.line, tok.col);
}

TermPtr parse_compose(const Signature& sig, Cursor& c) {
  std::vector<TermPtr> atoms;
  atoms.push_back(parse_atom(sig, c));
  while (c.accept(Tok::Dot)) atoms.push_back(parse_atom(sig, c));
  TermPtr t = atoms.back();
  for (auto it = atoms.rbegin() + 1; it != atoms.rend(); ++it)
    t = Term::compose(*it, t);
  return t;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  lines.push_back(current);
  return lines;
}

Strength parse_strength_marker(Cursor& c, bool* is_pure) {
  c.expect(Tok::At, "'@'");
  std::string s = c.expect_ident("a strength (pure, strong or weak)");
  *is_pure = s == "pure";
  if (s == "pure" || s == "strong") return Strength::Strong;
  if (s == "weak") return Strength::Weak;
  c.fail("unknown strength '" + s + "'");
}

}  // namespace

TermPtr parse_term(const Signature& sig, std::string_view text) {
  Cursor c(lex::line_tokens(text, 1));
  TermPtr t = parse_compose(sig, c);
  if (!c.done()) c.fail("trailing input after term");
  return t;
}

TermPtr parse_term_prefix(const Signature& sig, lex::Cursor& c) {
  return parse_compose(sig, c);
}

Ty parse_ty(std::string_view text) {
  Cursor c(lex::line_tokens(text, 1));
  Ty t = parse_ty_expr(c);
  if (!c.done()) c.fail("trailing input after type");
  return t;
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  int axiom_counter = 0;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    int line_no = static_cast<int>(n) + 1;
    Cursor c(lex::line_tokens(lines[n], line_no));
    if (c.done()) continue;
    std::string stmt = c.expect_ident("a statement");

    if (stmt == "type") {
      std::string name = c.expect_ident("a type name");
      if (sig.has_base(name))
        c.fail("duplicate type '" + name + "'");
      sig.base_types.push_back(name);
    } else if (stmt == "op") {
      std::string name = c.expect_ident("an op name");
      if (sig.find_op(name)) c.fail("duplicate op '" + name + "'");
      c.expect(Tok::Colon, "':'");
      Ty dom = parse_ty_expr(c);
      c.expect(Tok::Arrow, "'->'");
      Ty cod = parse_ty_expr(c);
      for (const Ty* t : {&dom, &cod})
        if (t->kind() != Ty::Kind::Base || !sig.has_base(t->name()))
          c.fail("op types must be declared base types");
      sig.ops.push_back(OpDecl{name, std::move(dom), std::move(cod)});
    } else if (stmt == "exception") {
      std::string name = c.expect_ident("an exception name");
      if (sig.find_exception(name)) c.fail("duplicate exception '" + name + "'");
      if (!c.at_ident("of")) c.fail("expected 'of'");
      c.get();
      Ty param = parse_ty_expr(c);
      if (param.kind() != Ty::Kind::Base || !sig.has_base(param.name()))
        c.fail("exception parameter type must be a declared base type");
      sig.exceptions.push_back(ExcDecl{name, std::move(param)});
    } else if (stmt == "axiom" || stmt == "eq") {
      std::string name;
      if (stmt == "eq") {
        name = c.expect_ident("an equation name");
        c.expect(Tok::Colon, "':'");
      } else if (c.at(Tok::Ident)) {
        // optionally named: axiom NAME : LHS == RHS @ pure
        Cursor probe = c;
        std::string maybe = probe.expect_ident("name");
        if (probe.at(Tok::Colon)) {
          name = maybe;
          c = probe;
          c.get();
        }
      }
      try {
        TermPtr lhs = parse_compose(sig, c);
        c.expect(Tok::EqEq, "'=='");
        TermPtr rhs = parse_compose(sig, c);
        bool is_pure = false;
        Strength strength = parse_strength_marker(c, &is_pure);
        if ((stmt == "axiom") != is_pure)
          c.fail(stmt == "axiom" ? "axiom requires '@ pure'"
                                 : "eq requires '@ strong' or '@ weak'");
        Equation equation = make_equation(sig, lhs, rhs, strength);
        if (is_pure) {
          if (infer(sig, lhs) != Decoration::Pure ||
              infer(sig, rhs) != Decoration::Pure)
            c.fail("pure axiom sides must be pure terms");
          if (name.empty()) name = "ax" + std::to_string(++axiom_counter);
          if (sig.find_axiom(name)) c.fail("duplicate axiom '" + name + "'");
          sig.axioms.push_back(NamedEquation{name, std::move(equation)});
        } else {
          if (sig.find_equation(name)) c.fail("duplicate eq '" + name + "'");
          sig.equations.push_back(NamedEquation{name, std::move(equation)});
        }
      } catch (const TypeError& e) {
        throw ParseError(e.what(), line_no, 1);
      } catch (const DecorationError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    } else if (stmt == "term") {
      std::string name = c.expect_ident("a term name");
      if (sig.find_term(name) || sig.find_op(name))
        c.fail("duplicate term '" + name + "'");
      c.expect(Tok::Equal, "'='");
      TermPtr body = parse_compose(sig, c);
      sig.terms.push_back(NamedTerm{name, std::move(body), line_no});
    } else {
      throw ParseError("unknown statement '" + stmt + "'", line_no, 1);
    }
    if (!c.done()) c.fail("trailing input");
  }
  return sig;
}

std::string print_signature(const Signature& sig) {
  std::ostringstream out;
  for (const auto& name : sig.base_types) out << "type " << name << "\n";
  for (const auto& op : sig.ops)
    out << "op " << op.name << " : " << to_string(op.dom) << " -> "
        << to_string(op.cod) << "\n";
  for (const auto& exc : sig.exceptions)
    out << "exception " << exc.name << " of " << to_string(exc.param) << "\n";
  for (const auto& ax : sig.axioms)
    out << "axiom " << ax.name << " : " << to_string(ax.eq.lhs) << " == "
        << to_string(ax.eq.rhs) << " @ pure\n";
  for (const auto& eq : sig.equations)
    out << "eq " << eq.name << " : " << to_string(eq.eq.lhs) << " == "
        << to_string(eq.eq.rhs)
        << (eq.eq.strength == Strength::Strong ? " @ strong\n" : " @ weak\n");
  for (const auto& nt : sig.terms)
    out << "term " << nt.name << " = " << to_string(nt.term) << "\n";
  return out.str();
}

}  // namespace dex
