#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dex/decoration.hpp"
#include "dex/error.hpp"
#include "dex/eval.hpp"
#include "dex/model.hpp"
#include "dex/proof.hpp"
#include "dex/signature.hpp"
#include "dex/theorems.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;  // semantic / proof / decoration failure
constexpr int kUsage = 2;      // I/O, syntax, bad invocation

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dex::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_check(const std::string& spec_path) {
  dex::Signature sig = dex::parse_signature(slurp(spec_path));
  int failures = 0;
  for (const auto& named : sig.terms) {
    try {
      dex::Typing typing = dex::typecheck(sig, named.term);
      dex::Decoration deco = dex::infer(sig, named.term);
      std::cout << named.name << " : " << dex::to_string(typing.dom) << " -> "
                << dex::to_string(typing.cod) << " [" << dex::to_string(deco)
                << "]\n";
    } catch (const dex::Error& e) {
      std::cout << named.name << " (line " << named.line
                << ") : error: " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? kViolation : kOk;
}

int cmd_verify(const std::string& spec_path, const std::string& model_path,
               const std::string& only) {
  dex::Signature sig = dex::parse_signature(slurp(spec_path));
  dex::Model model = dex::build_model(sig, dex::read_model(slurp(model_path)));
  dex::Evaluator ev(sig, model);
  int failures = 0;
  auto report = [&](const std::string& name, const dex::Equation& eq) {
    dex::Verdict v = ev.check_equation(eq);
    std::cout << (v.holds ? "HOLDS " : "FAILS ") << name;
    if (!v.holds) {
      std::cout << ": " << dex::to_string(v);
      ++failures;
    }
    std::cout << "\n";
  };

  if (only.empty()) {
    // the tag/untag axioms, then every declared goal
    for (const auto& exc : sig.exceptions) {
      const std::string& i = exc.name;
      dex::TermPtr lhs =
          dex::Term::compose(dex::Term::untag(i), dex::Term::tag(i));
      report("axiom untag-tag[" + i + "]",
             dex::make_equation(sig, lhs, dex::Term::id(dex::Ty::param(i)),
                                dex::Strength::Weak));
      for (const auto& other : sig.exceptions) {
        const std::string& j = other.name;
        if (j == i) continue;
        dex::TermPtr l =
            dex::Term::compose(dex::Term::untag(i), dex::Term::tag(j));
        dex::TermPtr r =
            dex::Term::compose(dex::Term::empty_map(dex::Ty::param(i)),
                               dex::Term::tag(j));
        report("axiom untag-other[" + i + "," + j + "]",
               dex::make_equation(sig, l, r, dex::Strength::Weak));
      }
    }
    for (const auto& ax : sig.axioms) report("axiom " + ax.name, ax.eq);
    for (const auto& eq : sig.equations) report("eq " + eq.name, eq.eq);
  } else {
    const dex::NamedEquation* eq = sig.find_equation(only);
    if (!eq) eq = sig.find_axiom(only);
    if (!eq) throw dex::Error("no equation named '" + only + "'");
    report("eq " + eq->name, eq->eq);
  }
  return failures ? kViolation : kOk;
}

int cmd_prove(const std::string& spec_path, const std::string& proof_path) {
  dex::Signature sig = dex::parse_signature(slurp(spec_path));
  dex::ProofScript script =
      dex::parse_proof(sig, slurp(proof_path), proof_path);
  dex::ProofVerdict verdict = dex::check_proof(sig, script);
  std::cout << dex::to_string(verdict) << "\n";
  return verdict.ok ? kOk : kViolation;
}

int cmd_fuzz(const std::string& spec_path, const dex::FuzzOptions& opt) {
  dex::Signature sig = dex::parse_signature(slurp(spec_path));
  dex::FuzzReport rep = dex::fuzz_soundness(sig, opt);
  std::cout << rep.to_text();
  return rep.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the decorated logic of exceptions"};
  app.require_subcommand(1);

  std::string spec_path, model_path, proof_path, only_eq;

  CLI::App* check = app.add_subcommand(
      "check", "typecheck and decorate every named term of a spec");
  check->add_option("spec", spec_path, "a .dex file")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "check the declared equations against a finite model");
  verify->add_option("spec", spec_path, "a .dex file")->required();
  verify->add_option("model", model_path, "a model .json file")->required();
  bool all = false;
  verify->add_flag("--all", all, "check everything (default)");
  verify->add_option("--eq", only_eq, "check one named equation");

  CLI::App* prove =
      app.add_subcommand("prove", "replay a proof script through the kernel");
  prove->add_option("spec", spec_path, "a .dex file")->required();
  prove->add_option("proof", proof_path, "a .prf file")->required();

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "differential and property testing over random models");
  dex::FuzzOptions opt;
  std::string mutate;
  fuzz->add_option("spec", spec_path, "a .dex file")->required();
  fuzz->add_option("--models", opt.models, "number of models");
  fuzz->add_option("--terms", opt.terms, "number of generated terms");
  fuzz->add_option("--seed", opt.seed, "random seed");
  fuzz->add_option("--max-carrier", opt.max_carrier, "max carrier size");
  fuzz->add_option("--mutate", mutate,
                   "test-only mutation (first-match-off reverses handler scan)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(spec_path);
    if (*verify) return cmd_verify(spec_path, model_path, only_eq);
    if (*prove) return cmd_prove(spec_path, proof_path);
    if (*fuzz) {
      if (opt.models < 1 || opt.terms < 1) {
        std::cerr << "fuzz: --models and --terms must be at least 1\n";
        return kUsage;
      }
      if (!mutate.empty()) {
        if (mutate != "first-match-off") {
          std::cerr << "fuzz: unknown mutation '" << mutate << "'\n";
          return kUsage;
        }
        opt.scan_order = dex::ScanOrder::Reversed;
      }
      return cmd_fuzz(spec_path, opt);
    }
  } catch (const dex::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const dex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
