#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dex/ty.hpp"

namespace dex {

class Signature;
class Term;
using TermPtr = std::shared_ptr<const Term>;

// Exception-name / term pairs: the family of a constitutive cotuple or the
// handler list of a try.
using Arms = std::vector<std::pair<std::string, TermPtr>>;

// Point-free morphism expression. Immutable; build through the factories.
class Term {
 public:
  enum class Kind {
    Id,        // id[T] : T -> T
    Op,        // declared pure operation
    Compose,   // g . f
    Tag,       // tag[E] : P[E] -> 0
    Untag,     // untag[E] : 0 -> P[E]
    EmptyMap,  // empty[T] : 0 -> T
    Downcast,  // down(k)
    CCotuple,  // ccot{E1 => f1, ...}, one arm per declared exception
    DCotuple,  // dcot(g | k), g : X -> Y, k : 0 -> Y
    Inl,       // inl[A,B] : A -> A+B
    Inr,       // inr[A,B] : B -> A+B
    SCotuple,  // scot(f | k) : A+B -> C
    Throw,     // throw[E,Y] : P[E] -> Y          (sugar)
    Try,       // try f catch{E1 => g1, ...}      (sugar)
  };

  static TermPtr id(Ty t);
  static TermPtr op(std::string name);
  static TermPtr compose(TermPtr outer, TermPtr inner);
  static TermPtr tag(std::string exception);
  static TermPtr untag(std::string exception);
  static TermPtr empty_map(Ty cod);
  static TermPtr downcast(TermPtr k);
  static TermPtr ccotuple(Arms family);
  static TermPtr dcotuple(TermPtr g, TermPtr k);
  static TermPtr inl(Ty a, Ty b);
  static TermPtr inr(Ty a, Ty b);
  static TermPtr scotuple(TermPtr f, TermPtr k);
  static TermPtr throw_(std::string exception, Ty cod);
  static TermPtr try_(TermPtr body, Arms handlers);

  Kind kind;
  Ty ty_a = Ty::empty();  // Id/EmptyMap/Throw: annotation; Inl/Inr: left
  Ty ty_b = Ty::empty();  // Inl/Inr: right
  std::string symbol;     // op name or exception name
  TermPtr child_a;        // Compose: outer; Downcast: k; DCotuple: g;
                          // SCotuple: f; Try: body
  TermPtr child_b;        // Compose: inner; DCotuple/SCotuple: k
  Arms arms;              // CCotuple family / Try handlers

 private:
  Term() : kind(Kind::Id) {}
  static std::shared_ptr<Term> blank(Kind k);
};

bool equal(const Term& a, const Term& b);
inline bool equal(const TermPtr& a, const TermPtr& b) { return equal(*a, *b); }

std::string to_string(const Term& t);
inline std::string to_string(const TermPtr& t) { return to_string(*t); }

struct Typing {
  Ty dom;
  Ty cod;
};

// Resolves the domain and codomain of t against sig, checking every
// composite, cotuple and handler along the way. Throws TypeError.
Typing typecheck(const Signature& sig, const Term& t);
inline Typing typecheck(const Signature& sig, const TermPtr& t) {
  return typecheck(sig, *t);
}

// Rewrites throw / try into the core constructors:
//   throw[E,Y]            ->  empty[Y] . tag[E]
//   try f catch{i_p=>g_p} ->  down(dcot(id[Y] | k_1) . f)
//     with k_{n+1} = empty[Y] and k_p = dcot(g_p | k_{p+1}) . untag[i_p].
// Structural only: no simplification is applied. Idempotent.
TermPtr elaborate(const Signature& sig, const TermPtr& t);

// Rewrites every type annotation to its resolved form (P[E] becomes its
// declared carrier). The kernel normalizes terms this way so structural
// matching never depends on how a parameter type was spelled.
TermPtr resolve_types(const Signature& sig, const TermPtr& t);

// Strong equations hold on ordinary and exceptional inputs; weak ones only
// on ordinary inputs.
enum class Strength { Strong, Weak };

struct Equation {
  TermPtr lhs;
  TermPtr rhs;
  Strength strength = Strength::Strong;
};

// Validates that lhs and rhs are parallel (same resolved dom and cod).
Equation make_equation(const Signature& sig, TermPtr lhs, TermPtr rhs,
                       Strength strength);

bool equal(const Equation& a, const Equation& b);
std::string to_string(const Equation& eq);

}  // namespace dex
