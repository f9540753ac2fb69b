#pragma once

#include <memory>
#include <string>
#include <utility>

namespace dex {

class Signature;

// Object of the logic: a declared base type, the parameter type of an
// exception (an alias for its declared base type), the empty type, or a
// binary coproduct of two types.
class Ty {
 public:
  enum class Kind { Base, Param, Empty, Sum };

  static Ty base(std::string name);
  static Ty param(std::string exception);
  static Ty empty();
  static Ty sum(Ty left, Ty right);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }  // Base / Param only
  const Ty& left() const { return parts_->first; }
  const Ty& right() const { return parts_->second; }

  bool is_empty() const { return kind_ == Kind::Empty; }

  // Structural comparison (Param(E) != Base(B) even when they resolve alike).
  friend bool operator==(const Ty& a, const Ty& b);

 private:
  Ty(Kind k, std::string n) : kind_(k), name_(std::move(n)) {}
  Kind kind_;
  std::string name_;
  std::shared_ptr<const std::pair<Ty, Ty>> parts_;
};

std::string to_string(const Ty& ty);

// Replaces every Param node by its declared base carrier type. Total on
// well-formed types; throws TypeError on an undeclared exception name.
Ty resolve(const Signature& sig, const Ty& ty);

// Equality after resolution; the notion of parallelism used by typechecking.
bool same_carrier(const Signature& sig, const Ty& a, const Ty& b);

}  // namespace dex
