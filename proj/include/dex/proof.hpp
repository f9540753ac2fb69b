#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dex/kernel.hpp"
#include "dex/signature.hpp"
#include "dex/term.hpp"

namespace dex {

struct ProofStep {
  std::string name;
  std::string rule;
  std::vector<RuleArg> args;
  std::vector<std::string> premises;  // names of earlier steps
};

// A proof script: ordered steps, a goal, and the step discharging it.
struct ProofScript {
  std::string title;  // file stem or builder name; informational
  Equation goal;
  std::vector<ProofStep> steps;
  std::string qed;  // name of the final step
};

struct ProofVerdict {
  bool ok = false;
  std::string step;               // failing step when !ok
  std::string reason;             // failure reason when !ok
  std::optional<Equation> final;  // judgment of the qed step when ok
};

std::string to_string(const ProofVerdict& v);

// Replays every step through the kernel; ok iff all steps check and the qed
// step's judgment equals the goal (same terms, same strength). The optional
// hook sees every judgment minted during the replay.
ProofVerdict check_proof(const Signature& sig, const ProofScript& p,
                         const std::function<void(const Judgment&)>& on_judgment = {});

// .prf format, line-oriented:
//   goal TERM == TERM        (strong)   |   goal TERM ~~ TERM   (weak)
//   step NAME = RULE(ARG, ...) [from STEP, ...]
//   qed STEP
ProofScript parse_proof(const Signature& sig, std::string_view text,
                        std::string title = "proof");
std::string print_proof(const ProofScript& p);

}  // namespace dex
