#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dex/decoration.hpp"
#include "dex/signature.hpp"
#include "dex/term.hpp"

namespace dex {

class Kernel;

// A decorated equation that has been derived. The only way to obtain one is
// Kernel::apply; there is no public constructor.
class Judgment {
 public:
  const Equation& equation() const { return eq_; }

 private:
  explicit Judgment(Equation eq) : eq_(std::move(eq)) {}
  Equation eq_;
  friend class Kernel;
};

// Argument of a rule instance: a term, or an exception / axiom name.
struct RuleArg {
  enum class Kind { Term, Name };
  Kind kind;
  TermPtr term;      // Kind::Term
  std::string name;  // Kind::Name

  static RuleArg of(TermPtr t) {
    return {Kind::Term, std::move(t), {}};
  }
  static RuleArg of(std::string n) {
    return {Kind::Name, nullptr, std::move(n)};
  }
};

// Static description of a catalog entry, enough for the .prf reader to parse
// rule instances without hard-coding each rule.
struct RuleInfo {
  std::string name;
  int premises = 0;           // -1: one premise per declared exception
  std::vector<RuleArg::Kind> args;
};

// LCF-style kernel for the decorated rules: identity/composition laws,
// strong/weak equivalence and congruence rules, the initial-type and
// constitutive-coproduct rules, the downcast and decorated-coproduct rules,
// the semi-pure binary coproduct rules, and the tag/untag axioms. Every
// application typechecks its terms and checks the decoration side
// conditions before minting a Judgment.
class Kernel {
 public:
  explicit Kernel(const Signature& sig);

  // Applies the named rule. Parameter terms are elaborated and typechecked;
  // premise equations are matched structurally. Throws KernelError.
  Judgment apply(const std::string& rule, const std::vector<Judgment>& premises,
                 const std::vector<RuleArg>& args);

  static const std::vector<RuleInfo>& catalog();
  static const RuleInfo* find_rule(const std::string& name);

  // Invoked on every judgment minted; the soundness harness hooks in here.
  void set_listener(std::function<void(const Judgment&)> fn) {
    listener_ = std::move(fn);
  }

  const Signature& sig() const { return sig_; }

 private:
  Judgment mint(TermPtr lhs, TermPtr rhs, Strength strength);
  TermPtr prepare(const TermPtr& t);  // elaborate + typecheck
  void require(bool cond, const std::string& reason);
  void require_at_most(const TermPtr& t, Decoration d, const std::string& who);

  const Signature& sig_;
  std::function<void(const Judgment&)> listener_;
};

}  // namespace dex
