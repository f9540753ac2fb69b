#include "dex/term.hpp"

#include <algorithm>

#include "dex/error.hpp"
#include "dex/signature.hpp"

namespace dex {

std::shared_ptr<Term> Term::blank(Kind k) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind = k;
  return t;
}

TermPtr Term::id(Ty t) {
  auto r = blank(Kind::Id);
  r->ty_a = std::move(t);
  return r;
}

TermPtr Term::op(std::string name) {
  auto r = blank(Kind::Op);
  r->symbol = std::move(name);
  return r;
}

TermPtr Term::compose(TermPtr outer, TermPtr inner) {
  auto r = blank(Kind::Compose);
  r->child_a = std::move(outer);
  r->child_b = std::move(inner);
  return r;
}

TermPtr Term::tag(std::string exception) {
  auto r = blank(Kind::Tag);
  r->symbol = std::move(exception);
  return r;
}

TermPtr Term::untag(std::string exception) {
  auto r = blank(Kind::Untag);
  r->symbol = std::move(exception);
  return r;
}

TermPtr Term::empty_map(Ty cod) {
  auto r = blank(Kind::EmptyMap);
  r->ty_a = std::move(cod);
  return r;
}

TermPtr Term::downcast(TermPtr k) {
  auto r = blank(Kind::Downcast);
  r->child_a = std::move(k);
  return r;
}

TermPtr Term::ccotuple(Arms family) {
  auto r = blank(Kind::CCotuple);
  r->arms = std::move(family);
  return r;
}

TermPtr Term::dcotuple(TermPtr g, TermPtr k) {
  auto r = blank(Kind::DCotuple);
  r->child_a = std::move(g);
  r->child_b = std::move(k);
  return r;
}

TermPtr Term::inl(Ty a, Ty b) {
  auto r = blank(Kind::Inl);
  r->ty_a = std::move(a);
  r->ty_b = std::move(b);
  return r;
}

TermPtr Term::inr(Ty a, Ty b) {
  auto r = blank(Kind::Inr);
  r->ty_a = std::move(a);
  r->ty_b = std::move(b);
  return r;
}

TermPtr Term::scotuple(TermPtr f, TermPtr k) {
  auto r = blank(Kind::SCotuple);
  r->child_a = std::move(f);
  r->child_b = std::move(k);
  return r;
}

TermPtr Term::throw_(std::string exception, Ty cod) {
  auto r = blank(Kind::Throw);
  r->symbol = std::move(exception);
  r->ty_a = std::move(cod);
  return r;
}

TermPtr Term::try_(TermPtr body, Arms handlers) {
  auto r = blank(Kind::Try);
  r->child_a = std::move(body);
  r->arms = std::move(handlers);
  return r;
}

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Id:
    case Term::Kind::EmptyMap:
      return a.ty_a == b.ty_a;
    case Term::Kind::Op:
    case Term::Kind::Tag:
    case Term::Kind::Untag:
      return a.symbol == b.symbol;
    case Term::Kind::Inl:
    case Term::Kind::Inr:
      return a.ty_a == b.ty_a && a.ty_b == b.ty_b;
    case Term::Kind::Throw:
      return a.symbol == b.symbol && a.ty_a == b.ty_a;
    case Term::Kind::Compose:
    case Term::Kind::DCotuple:
    case Term::Kind::SCotuple:
      return equal(a.child_a, b.child_a) && equal(a.child_b, b.child_b);
    case Term::Kind::Downcast:
      return equal(a.child_a, b.child_a);
    case Term::Kind::CCotuple:
    case Term::Kind::Try: {
      bool heads = a.kind == Term::Kind::Try
                       ? equal(a.child_a, b.child_a)
                       : true;
      if (!heads || a.arms.size() != b.arms.size()) return false;
      for (std::size_t i = 0; i < a.arms.size(); ++i) {
        if (a.arms[i].first != b.arms[i].first) return false;
        if (!equal(a.arms[i].second, b.arms[i].second)) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

std::string print_arms(const Arms& arms) {
  std::string out = "{";
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (i) out += ", ";
    out += arms[i].first + " => " + to_string(arms[i].second);
  }
  return out + "}";
}

// An atom never needs parentheses; a compose chain does when it appears in
// atom position (left operand of '.', or a try body followed by 'catch').
bool is_chain(const Term& t) {
  return t.kind == Term::Kind::Compose || t.kind == Term::Kind::Try;
}

std::string print_atom(const Term& t) {
  if (is_chain(t)) return "(" + to_string(t) + ")";
  return to_string(t);
}

}  // namespace

std::string to_string(const Term& t) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Id:
      return "id[" + to_string(t.ty_a) + "]";
    case K::Op:
      return t.symbol;
    case K::Compose:
      // right-associated chains print flat: a . b . c
      return print_atom(*t.child_a) + " . " + to_string(*t.child_b);
    case K::Tag:
      return "tag[" + t.symbol + "]";
    case K::Untag:
      return "untag[" + t.symbol + "]";
    case K::EmptyMap:
      return "empty[" + to_string(t.ty_a) + "]";
    case K::Downcast:
      return "down(" + to_string(t.child_a) + ")";
    case K::CCotuple:
      return "ccot" + print_arms(t.arms);
    case K::DCotuple:
      return "dcot(" + to_string(t.child_a) + " | " + to_string(t.child_b) + ")";
    case K::Inl:
      return "inl[" + to_string(t.ty_a) + "," + to_string(t.ty_b) + "]";
    case K::Inr:
      return "inr[" + to_string(t.ty_a) + "," + to_string(t.ty_b) + "]";
    case K::SCotuple:
      return "scot(" + to_string(t.child_a) + " | " + to_string(t.child_b) + ")";
    case K::Throw:
      return "throw[" + t.symbol + "," + to_string(t.ty_a) + "]";
    case K::Try:
      return "try " + print_atom(*t.child_a) + " catch" + print_arms(t.arms);
  }
  return "?";
}

namespace {

const ExcDecl& need_exception(const Signature& sig, const std::string& name) {
  const ExcDecl* e = sig.find_exception(name);
  if (!e) throw TypeError("unknown exception: " + name);
  return *e;
}

}  // namespace

Typing typecheck(const Signature& sig, const Term& t) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Id: {
      resolve(sig, t.ty_a);  // validates Param annotations
      return {t.ty_a, t.ty_a};
    }
    case K::Op: {
      const OpDecl* op = sig.find_op(t.symbol);
      if (!op) throw TypeError("unknown op: " + t.symbol);
      return {op->dom, op->cod};
    }
    case K::Compose: {
      Typing inner = typecheck(sig, *t.child_b);
      Typing outer = typecheck(sig, *t.child_a);
      if (!same_carrier(sig, inner.cod, outer.dom))
        throw TypeError("composition mismatch: cod " + to_string(inner.cod) +
                        " vs dom " + to_string(outer.dom) + " in " +
                        to_string(t));
      return {inner.dom, outer.cod};
    }
    case K::Tag: {
      need_exception(sig, t.symbol);
      return {Ty::param(t.symbol), Ty::empty()};
    }
    case K::Untag: {
      need_exception(sig, t.symbol);
      return {Ty::empty(), Ty::param(t.symbol)};
    }
    case K::EmptyMap: {
      resolve(sig, t.ty_a);
      return {Ty::empty(), t.ty_a};
    }
    case K::Downcast:
      return typecheck(sig, *t.child_a);
    case K::CCotuple: {
      if (t.arms.empty())
        throw TypeError("ccot requires at least one declared exception");
      if (t.arms.size() != sig.exceptions.size())
        throw TypeError("ccot must list one component per declared exception");
      std::optional<Ty> cod;
      for (std::size_t i = 0; i < t.arms.size(); ++i) {
        if (t.arms[i].first != sig.exceptions[i].name)
          throw TypeError("ccot components must cover the declared exceptions "
                          "exactly once (expected " + sig.exceptions[i].name +
                          ", got " + t.arms[i].first + ")");
        Typing c = typecheck(sig, *t.arms[i].second);
        if (!same_carrier(sig, c.dom, Ty::param(t.arms[i].first)))
          throw TypeError("ccot component for " + t.arms[i].first +
                          " must have domain P[" + t.arms[i].first + "]");
        if (!cod)
          cod = c.cod;
        else if (!same_carrier(sig, *cod, c.cod))
          throw TypeError("ccot components disagree on codomain");
      }
      return {Ty::empty(), *cod};
    }
    case K::DCotuple: {
      Typing g = typecheck(sig, *t.child_a);
      Typing k = typecheck(sig, *t.child_b);
      if (resolve(sig, k.dom).kind() != Ty::Kind::Empty)
        throw TypeError("dcot second slot must start from 0");
      if (!same_carrier(sig, g.cod, k.cod))
        throw TypeError("dcot slots disagree on codomain");
      return {g.dom, g.cod};
    }
    case K::Inl: {
      resolve(sig, t.ty_a);
      resolve(sig, t.ty_b);
      return {t.ty_a, Ty::sum(t.ty_a, t.ty_b)};
    }
    case K::Inr: {
      resolve(sig, t.ty_a);
      resolve(sig, t.ty_b);
      return {t.ty_b, Ty::sum(t.ty_a, t.ty_b)};
    }
    case K::SCotuple: {
      Typing f = typecheck(sig, *t.child_a);
      Typing k = typecheck(sig, *t.child_b);
      if (!same_carrier(sig, f.cod, k.cod))
        throw TypeError("scot slots disagree on codomain");
      return {Ty::sum(f.dom, k.dom), f.cod};
    }
    case K::Throw: {
      need_exception(sig, t.symbol);
      resolve(sig, t.ty_a);
      return {Ty::param(t.symbol), t.ty_a};
    }
    case K::Try: {
      if (t.arms.empty()) throw TypeError("try handler list must be non-empty");
      Typing f = typecheck(sig, *t.child_a);
      for (const auto& [index, handler] : t.arms) {
        need_exception(sig, index);
        Typing h = typecheck(sig, *handler);
        if (!same_carrier(sig, h.dom, Ty::param(index)))
          throw TypeError("handler for " + index + " must have domain P[" +
                          index + "]");
        if (!same_carrier(sig, h.cod, f.cod))
          throw TypeError("handler codomain differs from try codomain");
      }
      return {f.dom, f.cod};
    }
  }
  throw TypeError("unreachable term kind");
}

TermPtr elaborate(const Signature& sig, const TermPtr& t) {
  using K = Term::Kind;
  switch (t->kind) {
    case K::Id:
    case K::Op:
    case K::Tag:
    case K::Untag:
    case K::EmptyMap:
    case K::Inl:
    case K::Inr:
      return t;
    case K::Compose: {
      TermPtr a = elaborate(sig, t->child_a);
      TermPtr b = elaborate(sig, t->child_b);
      if (a == t->child_a && b == t->child_b) return t;
      return Term::compose(std::move(a), std::move(b));
    }
    case K::Downcast: {
      TermPtr k = elaborate(sig, t->child_a);
      if (k == t->child_a) return t;
      return Term::downcast(std::move(k));
    }
    case K::CCotuple: {
      Arms family;
      family.reserve(t->arms.size());
      bool changed = false;
      for (const auto& [index, component] : t->arms) {
        TermPtr e = elaborate(sig, component);
        changed |= e != component;
        family.emplace_back(index, std::move(e));
      }
      if (!changed) return t;
      return Term::ccotuple(std::move(family));
    }
    case K::DCotuple: {
      TermPtr a = elaborate(sig, t->child_a);
      TermPtr b = elaborate(sig, t->child_b);
      if (a == t->child_a && b == t->child_b) return t;
      return Term::dcotuple(std::move(a), std::move(b));
    }
    case K::SCotuple: {
      TermPtr a = elaborate(sig, t->child_a);
      TermPtr b = elaborate(sig, t->child_b);
      if (a == t->child_a && b == t->child_b) return t;
      return Term::scotuple(std::move(a), std::move(b));
    }
    case K::Throw:
      return Term::compose(Term::empty_map(t->ty_a), Term::tag(t->symbol));
    case K::Try: {
      Ty cod = typecheck(sig, *t).cod;
      TermPtr body = elaborate(sig, t->child_a);
      // k_{n+1} = empty[Y]; k_p = dcot(g_p | k_{p+1}) . untag[i_p]
      TermPtr k = Term::empty_map(cod);
      for (auto it = t->arms.rbegin(); it != t->arms.rend(); ++it) {
        TermPtr handler = elaborate(sig, it->second);
        k = Term::compose(Term::dcotuple(std::move(handler), std::move(k)),
                          Term::untag(it->first));
      }
      return Term::downcast(
          Term::compose(Term::dcotuple(Term::id(cod), std::move(k)), body));
    }
  }
  throw TypeError("unreachable term kind");
}

TermPtr resolve_types(const Signature& sig, const TermPtr& t) {
  using K = Term::Kind;
  switch (t->kind) {
    case K::Op:
    case K::Tag:
    case K::Untag:
      return t;
    case K::Id: {
      Ty r = resolve(sig, t->ty_a);
      if (r == t->ty_a) return t;
      return Term::id(std::move(r));
    }
    case K::EmptyMap: {
      Ty r = resolve(sig, t->ty_a);
      if (r == t->ty_a) return t;
      return Term::empty_map(std::move(r));
    }
    case K::Inl:
    case K::Inr: {
      Ty a = resolve(sig, t->ty_a);
      Ty b = resolve(sig, t->ty_b);
      if (a == t->ty_a && b == t->ty_b) return t;
      return t->kind == K::Inl ? Term::inl(std::move(a), std::move(b))
                               : Term::inr(std::move(a), std::move(b));
    }
    case K::Throw: {
      Ty r = resolve(sig, t->ty_a);
      if (r == t->ty_a) return t;
      return Term::throw_(t->symbol, std::move(r));
    }
    case K::Compose: {
      TermPtr a = resolve_types(sig, t->child_a);
      TermPtr b = resolve_types(sig, t->child_b);
      if (a == t->child_a && b == t->child_b) return t;
      return Term::compose(std::move(a), std::move(b));
    }
    case K::Downcast: {
      TermPtr k = resolve_types(sig, t->child_a);
      if (k == t->child_a) return t;
      return Term::downcast(std::move(k));
    }
    case K::DCotuple:
    case K::SCotuple: {
      TermPtr a = resolve_types(sig, t->child_a);
      TermPtr b = resolve_types(sig, t->child_b);
      if (a == t->child_a && b == t->child_b) return t;
      return t->kind == K::DCotuple
                 ? Term::dcotuple(std::move(a), std::move(b))
                 : Term::scotuple(std::move(a), std::move(b));
    }
    case K::CCotuple:
    case K::Try: {
      Arms arms;
      arms.reserve(t->arms.size());
      bool changed = false;
      for (const auto& [index, sub] : t->arms) {
        TermPtr e = resolve_types(sig, sub);
        changed |= e != sub;
        arms.emplace_back(index, std::move(e));
      }
      TermPtr body = t->kind == K::Try ? resolve_types(sig, t->child_a) : nullptr;
      changed |= t->kind == K::Try && body != t->child_a;
      if (!changed) return t;
      return t->kind == K::Try ? Term::try_(std::move(body), std::move(arms))
                               : Term::ccotuple(std::move(arms));
    }
  }
  throw TypeError("unreachable term kind");
}

Equation make_equation(const Signature& sig, TermPtr lhs, TermPtr rhs,
                       Strength strength) {
  Typing l = typecheck(sig, *lhs);
  Typing r = typecheck(sig, *rhs);
  if (!same_carrier(sig, l.dom, r.dom) || !same_carrier(sig, l.cod, r.cod))
    throw TypeError("equation sides are not parallel: " + to_string(lhs) +
                    " : " + to_string(l.dom) + " -> " + to_string(l.cod) +
                    " vs " + to_string(rhs) + " : " + to_string(r.dom) +
                    " -> " + to_string(r.cod));
  return Equation{std::move(lhs), std::move(rhs), strength};
}

bool equal(const Equation& a, const Equation& b) {
  return a.strength == b.strength && equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

std::string to_string(const Equation& eq) {
  return to_string(eq.lhs) + (eq.strength == Strength::Strong ? " == " : " ~~ ") +
         to_string(eq.rhs);
}

}  // namespace dex
