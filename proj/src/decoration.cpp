#include "dex/decoration.hpp"

#include "dex/error.hpp"

namespace dex {

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::Pure: return "pure";
    case Decoration::Propagator: return "ppg";
    case Decoration::Catcher: return "ctc";
  }
  return "?";
}

Decoration infer(const Signature& sig, const TermPtr& t) {
  using K = Term::Kind;
  switch (t->kind) {
    case K::Id:
    case K::Op:
    case K::EmptyMap:
    case K::Inl:
    case K::Inr:
      return Decoration::Pure;
    case K::Tag:
    case K::Throw:
      return Decoration::Propagator;
    case K::Untag:
      return Decoration::Catcher;
    case K::Compose:
      return max(infer(sig, t->child_a), infer(sig, t->child_b));
    case K::Downcast:
      infer(sig, t->child_a);  // still reject ill-decorated children
      return Decoration::Propagator;
    case K::CCotuple: {
      for (const auto& [index, component] : t->arms)
        if (infer(sig, component) == Decoration::Catcher)
          throw DecorationError("constitutive component for " + index +
                                " must be a propagator");
      return Decoration::Catcher;
    }
    case K::DCotuple: {
      if (infer(sig, t->child_a) == Decoration::Catcher)
        throw DecorationError("dcot first slot must be a propagator");
      infer(sig, t->child_b);
      return Decoration::Catcher;
    }
    case K::SCotuple: {
      Decoration f = infer(sig, t->child_a);
      Decoration k = infer(sig, t->child_b);
      if (f == Decoration::Catcher)
        throw DecorationError("scot first slot must be a propagator");
      if (f == Decoration::Pure && k == Decoration::Pure)
        return Decoration::Pure;
      if (k <= Decoration::Propagator) return Decoration::Propagator;
      return Decoration::Catcher;
    }
    case K::Try:
      // handler violations surface through the elaborated form
      infer(sig, elaborate(sig, t));
      return Decoration::Propagator;
  }
  throw DecorationError("unreachable term kind");
}

bool check_at(const Signature& sig, const TermPtr& t, Decoration required) {
  return infer(sig, t) <= required;
}

}  // namespace dex
