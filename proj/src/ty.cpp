#include "dex/ty.hpp"

#include "dex/error.hpp"
#include "dex/signature.hpp"

namespace dex {

Ty Ty::base(std::string name) { return Ty(Kind::Base, std::move(name)); }

Ty Ty::param(std::string exception) {
  return Ty(Kind::Param, std::move(exception));
}

Ty Ty::empty() { return Ty(Kind::Empty, {}); }

Ty Ty::sum(Ty left, Ty right) {
  Ty t(Kind::Sum, {});
  t.parts_ = std::make_shared<const std::pair<Ty, Ty>>(std::move(left),
                                                       std::move(right));
  return t;
}

bool operator==(const Ty& a, const Ty& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Ty::Kind::Empty:
      return true;
    case Ty::Kind::Base:
    case Ty::Kind::Param:
      return a.name_ == b.name_;
    case Ty::Kind::Sum:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::string to_string(const Ty& ty) {
  switch (ty.kind()) {
    case Ty::Kind::Base:
      return ty.name();
    case Ty::Kind::Param:
      return "P[" + ty.name() + "]";
    case Ty::Kind::Empty:
      return "0";
    case Ty::Kind::Sum: {
      auto wrap = [](const Ty& t, bool needs) {
        return needs ? "(" + to_string(t) + ")" : to_string(t);
      };
      // '+' is left-associative in the grammar.
      return wrap(ty.left(), false) + "+" +
             wrap(ty.right(), ty.right().kind() == Ty::Kind::Sum);
    }
  }
  return "?";
}

Ty resolve(const Signature& sig, const Ty& ty) {
  switch (ty.kind()) {
    case Ty::Kind::Base:
    case Ty::Kind::Empty:
      return ty;
    case Ty::Kind::Param: {
      const ExcDecl* e = sig.find_exception(ty.name());
      if (!e) throw TypeError("unknown exception in type: " + ty.name());
      return e->param;
    }
    case Ty::Kind::Sum:
      return Ty::sum(resolve(sig, ty.left()), resolve(sig, ty.right()));
  }
  throw TypeError("unreachable type kind");
}

bool same_carrier(const Signature& sig, const Ty& a, const Ty& b) {
  return resolve(sig, a) == resolve(sig, b);
}

}  // namespace dex
