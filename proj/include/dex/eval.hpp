#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dex/model.hpp"
#include "dex/term.hpp"

namespace dex {

// Catcher-form interpretation of a term: a total table on dom-carrier + Exc.
// For dom 0 the table is defined on Exc alone.
struct FnTable {
  Ty dom = Ty::empty();  // resolved
  Ty cod = Ty::empty();  // resolved
  std::vector<LiftedValue> inputs;
  std::vector<LiftedValue> outputs;

  const LiftedValue& apply(const LiftedValue& x) const;
};

struct Verdict {
  bool holds = true;
  Strength checked = Strength::Strong;
  std::optional<LiftedValue> witness;  // least failing input
};

std::string to_string(const Verdict& v);  // holds / strong-fail at ...

// Handler scan order of the operational try evaluator. Reversed exists only
// so the tests can prove the differential oracle is not vacuous.
enum class ScanOrder { FirstMatch, Reversed };

// Interprets terms over one model, memoized per term node. Owns copies of
// the signature and model so it cannot outlive its inputs.
class Evaluator {
 public:
  Evaluator(Signature sig, Model m);

  // Catcher extension of t's interpretation. Sugar evaluates through its
  // elaboration.
  const FnTable& eval(const TermPtr& t);

  // try f catch{...} per the operational algorithm: propagate exceptional
  // inputs; otherwise run f, return ordinary results, else scan the handler
  // list and recover at the first matching index, propagating when none
  // matches.
  LiftedValue eval_try_operational(
      const FnTable& f,
      const std::vector<std::pair<std::string, const FnTable*>>& handlers,
      const LiftedValue& x, ScanOrder order = ScanOrder::FirstMatch) const;

  // Same function computed through the cotuple recursion
  // k_p = (g_p | k_{p+1}) . untag[i_p], k_{n+1} = exception identity.
  LiftedValue eval_try_compositional(
      const FnTable& f,
      const std::vector<std::pair<std::string, const FnTable*>>& handlers,
      const LiftedValue& x) const;

  // Strong: compare on dom-carrier + Exc. Weak: on dom-carrier only.
  Verdict check_equation(const Equation& eq);

  // True iff eval(t) fixes every exceptional value.
  bool propagates(const TermPtr& t);

  const Signature& sig() const { return sig_; }
  const Model& model() const { return model_; }

 private:
  FnTable eval_core(const TermPtr& t);

  Signature sig_;
  Model model_;
  std::vector<ExcValue> exc_;
  std::map<const Term*, FnTable> memo_;
  std::vector<TermPtr> retained_;  // keeps memo keys valid
};

}  // namespace dex
