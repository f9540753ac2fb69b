#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dex/term.hpp"
#include "dex/ty.hpp"

namespace dex {

struct OpDecl {
  std::string name;
  Ty dom;
  Ty cod;
};

struct ExcDecl {
  std::string name;
  Ty param;  // a declared base type
};

struct NamedEquation {
  std::string name;
  Equation eq;
};

struct NamedTerm {
  std::string name;
  TermPtr term;
  int line = 0;  // declaration line in the source file
};

// Declarations of a .dex file: pure part (base types, unary ops, strong pure
// axioms) plus the exception declarations. Declaration order of exceptions
// fixes the enumeration order of the index set.
class Signature {
 public:
  std::vector<std::string> base_types;
  std::vector<OpDecl> ops;
  std::vector<ExcDecl> exceptions;       // ordered: fixes Exc enumeration
  std::vector<NamedEquation> axioms;     // pure strong axioms
  std::vector<NamedEquation> equations;  // verification goals (@strong/@weak)
  std::vector<NamedTerm> terms;          // named definitions

  bool has_base(const std::string& name) const;
  const OpDecl* find_op(const std::string& name) const;
  const ExcDecl* find_exception(const std::string& name) const;
  const NamedEquation* find_axiom(const std::string& name) const;
  const NamedEquation* find_equation(const std::string& name) const;
  const NamedTerm* find_term(const std::string& name) const;

  // Index of an exception in declaration order.
  std::optional<std::size_t> exception_index(const std::string& name) const;
};

// Parses .dex text. Statements are line-oriented:
//   type NAME
//   op NAME : TY -> TY
//   exception NAME of TY
//   axiom [NAME :] TERM == TERM @ pure
//   eq NAME : TERM == TERM @ strong|weak
//   term NAME = TERM
//   # comment
// Named-term references are expanded where they occur.
Signature parse_signature(std::string_view text);

// Canonical rendering; parse_signature(print_signature(s)) reproduces s.
std::string print_signature(const Signature& sig);

// Parses a single term in .dex syntax against an existing signature
// (used by the .prf reader and the tests).
TermPtr parse_term(const Signature& sig, std::string_view text);

// Parses a single type annotation in .dex syntax.
Ty parse_ty(std::string_view text);

}  // namespace dex
