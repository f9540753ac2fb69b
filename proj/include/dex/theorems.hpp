#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dex/eval.hpp"
#include "dex/proof.hpp"
#include "dex/rng.hpp"
#include "dex/signature.hpp"
#include "dex/term.hpp"

namespace dex {

// Proof-script builders for the main results, parameterized over any
// signature with enough declared exceptions. Each returns a script that
// check_proof accepts; the goals also hold semantically in every finite
// model (the tests enforce both).

// dcot(g | empty[Y]) == g, for a propagator g.
ProofScript prove_cotuple_collapse(const Signature& sig, const TermPtr& g);

// tag[i] . untag[i] == id[0].
ProofScript prove_annihilation_untag_tag(const Signature& sig,
                                         const std::string& i);

// try f catch{i => throw[i,Y]} == f, for a propagator f : X -> Y.
ProofScript prove_annihilation_catch_raise(const Signature& sig,
                                           const TermPtr& f,
                                           const std::string& i);

// dcot(inr | inl . untag[i]) . untag[j] == dcot(inl | inr . untag[j]) . untag[i]
// (untagging two distinct indices commutes), i != j.
ProofScript prove_commutation_untag_untag(const Signature& sig,
                                          const std::string& i,
                                          const std::string& j);

// try f catch{i => g, j => h} == try f catch{j => h, i => g}, i != j,
// f, g, h propagators.
ProofScript prove_commutation_catch_catch(const Signature& sig,
                                          const TermPtr& f,
                                          const std::string& i,
                                          const TermPtr& g,
                                          const std::string& j,
                                          const TermPtr& h);

// scot(g | h) . dcot(inl | inr . untag[j]) == dcot(g | (h . untag[j])):
// the bridge between the decorated coproduct and the semi-pure sum used by
// the catch-catch script.
ProofScript prove_aux_cotuple_sum(const Signature& sig, const TermPtr& g,
                                  const std::string& i, const TermPtr& h,
                                  const std::string& j);

// Derived-rule validation: from a propagator p with p ~ k conclude
// p == down(k), using only sym/trans/ppg-weak-to-strong.
ProofScript prove_downcast_unique(const Signature& sig, const TermPtr& g,
                                  const TermPtr& k0);

// All scripts above instantiated at a signature's first exceptions; the
// shipped .prf files are these, serialized for fixture F1.
std::vector<ProofScript> shipped_scripts(const Signature& sig);

// ---------------------------------------------------------------------------
// Differential / property harness.

struct FuzzOptions {
  int models = 8;
  int terms = 64;
  std::uint64_t seed = 1;
  int max_carrier = 3;
  int max_depth = 6;
  int max_handlers = 3;
  ScanOrder scan_order = ScanOrder::FirstMatch;  // Reversed: mutation testing
};

struct FuzzReport {
  int models = 0;
  int agreement_cases = 0;     // three-way try-catch comparisons
  int propagation_checks = 0;  // ppg terms checked to fix exceptions
  int purity_checks = 0;       // pure terms checked Ord -> Ord
  int collapse_checks = 0;     // weakly-equal ppg pairs upgraded to strong
  int judgment_checks = 0;     // kernel judgments validated per model
  std::vector<std::string> lines;       // PASS/FAIL ... @ model-id [witness]
  std::vector<std::string> violations;  // the FAIL subset of lines

  bool ok() const { return violations.empty(); }
  std::string to_text() const;  // stable line protocol
};

// Generates random well-typed terms and handler lists over seeded models,
// replays the three-way try-catch agreement, the propagation and purity
// invariants, the weak=>strong collapse on propagator pairs, and validates
// every judgment of the shipped scripts against every model.
FuzzReport fuzz_soundness(const Signature& sig, const FuzzOptions& opt);

// Seeded random signature: <= 3 base types, <= 3 exceptions, a few unary
// ops, no axioms.
Signature random_signature(Rng& rng);

// Random well-typed term with the given resolved dom/cod, inferring at most
// max_deco; nullopt when the shape cannot be built at this depth.
std::optional<TermPtr> random_term(const Signature& sig, Rng& rng, const Ty& dom,
                                   const Ty& cod, int depth, Decoration max_deco);

// Random term of any type (bottom-up), for the propagation/purity fuzz.
TermPtr random_any_term(const Signature& sig, Rng& rng, int depth);

}  // namespace dex
