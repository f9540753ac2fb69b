#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dex/error.hpp"
#include "dex/eval.hpp"
#include "dex/model.hpp"
#include "dex/proof.hpp"
#include "dex/signature.hpp"
#include "dex/theorems.hpp"

using namespace dex;

namespace {

Signature f1() {
  return parse_signature(
      "type B\n"
      "op f : B -> B\n"
      "exception E1 of B\n"
      "exception E2 of B\n");
}

std::vector<Model> f1_models() {
  Signature sig = f1();
  std::vector<Model> models = enumerate_models(sig, 3, 2024, 10);
  Model handmade;
  handmade.id = "f1";
  handmade.carriers = {{"B", {"b0", "b1"}}};
  handmade.ops = {{"f", {{"b0", "b1"}, {"b1", "b0"}}}};
  models.push_back(build_model(sig, handmade));
  return models;
}

void expect_qed_and_valid(const Signature& sig, const ProofScript& script) {
  CAPTURE(script.title);
  ProofVerdict verdict = check_proof(sig, script);
  CAPTURE(to_string(verdict));
  REQUIRE(verdict.ok);
  for (const auto& m : f1_models()) {
    Evaluator ev(sig, m);
    Verdict v = ev.check_equation(script.goal);
    CAPTURE(m.id);
    CAPTURE(to_string(v));
    CHECK(v.holds);
  }
}

}  // namespace

TEST_CASE("cotuple collapse checks and holds") {
  Signature sig = f1();
  expect_qed_and_valid(
      sig, prove_cotuple_collapse(sig, Term::throw_("E1", Ty::base("B"))));
  // instantiating at another propagator reuses the same script shape
  expect_qed_and_valid(sig, prove_cotuple_collapse(sig, Term::op("f")));
  expect_qed_and_valid(
      sig,
      prove_cotuple_collapse(
          sig, Term::compose(Term::op("f"), Term::throw_("E2", Ty::base("B")))));
  CHECK_THROWS_AS(prove_cotuple_collapse(sig, Term::untag("E1")), KernelError);
}

TEST_CASE("annihilation untag-tag checks and holds") {
  Signature sig = f1();
  expect_qed_and_valid(sig, prove_annihilation_untag_tag(sig, "E1"));
  expect_qed_and_valid(sig, prove_annihilation_untag_tag(sig, "E2"));
  CHECK_THROWS_AS(prove_annihilation_untag_tag(sig, "E9"), KernelError);
}

TEST_CASE("annihilation untag-tag with a single declared exception") {
  Signature sig = parse_signature("type U\nexception Only of U\n");
  ProofScript script = prove_annihilation_untag_tag(sig, "Only");
  ProofVerdict verdict = check_proof(sig, script);
  CAPTURE(to_string(verdict));
  REQUIRE(verdict.ok);
  for (const auto& m : enumerate_models(sig, 3, 5, 8)) {
    Evaluator ev(sig, m);
    CHECK(ev.check_equation(script.goal).holds);
  }
}

TEST_CASE("annihilation catch-raise checks and holds") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  expect_qed_and_valid(
      sig, prove_annihilation_catch_raise(sig, Term::throw_("E2", b), "E1"));
  // a pure body lifts silently
  expect_qed_and_valid(
      sig, prove_annihilation_catch_raise(sig, Term::id(b), "E1"));
  // a catcher body is rejected before any step is built
  CHECK_THROWS_AS(
      prove_annihilation_catch_raise(sig, Term::untag("E1"), "E1"),
      KernelError);
}

TEST_CASE("commutation untag-untag checks and holds") {
  Signature sig = f1();
  expect_qed_and_valid(sig, prove_commutation_untag_untag(sig, "E1", "E2"));
  expect_qed_and_valid(sig, prove_commutation_untag_untag(sig, "E2", "E1"));
  CHECK_THROWS_AS(prove_commutation_untag_untag(sig, "E1", "E1"), KernelError);
}

TEST_CASE("commutation untag-untag with a third exception in scope") {
  Signature sig = parse_signature(
      "type B\ntype C\nexception E1 of B\nexception E2 of C\n"
      "exception E3 of B\n");
  ProofScript script = prove_commutation_untag_untag(sig, "E1", "E2");
  ProofVerdict verdict = check_proof(sig, script);
  CAPTURE(to_string(verdict));
  REQUIRE(verdict.ok);
  for (const auto& m : enumerate_models(sig, 2, 77, 8)) {
    Evaluator ev(sig, m);
    CHECK(ev.check_equation(script.goal).holds);
  }
}

TEST_CASE("aux cotuple-sum bridge checks and holds") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  expect_qed_and_valid(
      sig, prove_aux_cotuple_sum(sig, Term::id(Ty::param("E1")), "E1",
                                 Term::throw_("E2", b), "E2"));
}

TEST_CASE("commutation catch-catch checks and holds") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  expect_qed_and_valid(
      sig, prove_commutation_catch_catch(sig, Term::throw_("E1", b), "E1",
                                         Term::id(b), "E2", Term::id(b)));
  expect_qed_and_valid(
      sig, prove_commutation_catch_catch(sig, Term::throw_("E1", b), "E1",
                                         Term::id(b), "E2", Term::op("f")));
  CHECK_THROWS_AS(
      prove_commutation_catch_catch(sig, Term::throw_("E1", b), "E1",
                                    Term::id(b), "E1", Term::op("f")),
      KernelError);
  CHECK_THROWS_AS(
      prove_commutation_catch_catch(sig, Term::untag("E1"), "E1", Term::id(b),
                                    "E2", Term::id(b)),
      KernelError);
}

TEST_CASE("downcast uniqueness is derivable") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  TermPtr k0 =
      Term::ccotuple({{"E1", Term::id(b)}, {"E2", Term::throw_("E2", b)}});
  ProofScript script =
      prove_downcast_unique(sig, Term::throw_("E1", b), k0);
  expect_qed_and_valid(sig, script);
}

TEST_CASE("same-index handlers do not commute: first match wins") {
  Signature sig = f1();
  Model m;
  m.carriers = {{"B", {"b0", "b1"}}};
  m.ops = {{"f", {{"b0", "b1"}, {"b1", "b0"}}}};
  m = build_model(sig, m);
  Evaluator ev(sig, m);
  Ty b = Ty::base("B");

  // g and h differ at payload b0: g = id, h = f (the swap)
  TermPtr body = Term::throw_("E1", b);
  TermPtr one = Term::try_(body, {{"E1", Term::id(b)}, {"E1", Term::op("f")}});
  TermPtr two = Term::try_(body, {{"E1", Term::op("f")}, {"E1", Term::id(b)}});
  Verdict v = ev.check_equation(make_equation(sig, one, two, Strength::Weak));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == LiftedValue::ordinary("b0"));

  const FnTable& t1 = ev.eval(one);
  CHECK(t1.apply(LiftedValue::ordinary("b0")) == LiftedValue::ordinary("b0"));
  const FnTable& t2 = ev.eval(two);
  CHECK(t2.apply(LiftedValue::ordinary("b0")) == LiftedValue::ordinary("b1"));
}

TEST_CASE("dead handlers are unreachable") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  for (const auto& m : f1_models()) {
    Evaluator ev(sig, m);
    for (const auto& body :
         {Term::throw_("E1", b), Term::throw_("E2", b),
          Term::compose(Term::op("f"), Term::op("f"))}) {
      TermPtr doubled =
          Term::try_(body, {{"E1", Term::id(b)}, {"E1", Term::op("f")}});
      TermPtr single = Term::try_(body, {{"E1", Term::id(b)}});
      Verdict v = ev.check_equation(
          make_equation(sig, doubled, single, Strength::Strong));
      CAPTURE(m.id);
      CHECK(v.holds);
    }
  }
}

TEST_CASE("handlers for an exception the body never raises are inert") {
  Signature sig = parse_signature(
      "type B\nexception E1 of B\nexception E2 of B\nexception E3 of B\n");
  Ty b = Ty::base("B");
  TermPtr body = Term::throw_("E3", b);
  TermPtr one = Term::try_(body, {{"E1", Term::id(b)}, {"E2", Term::id(b)}});
  TermPtr two = Term::try_(body, {{"E2", Term::id(b)}, {"E1", Term::id(b)}});
  for (const auto& m : enumerate_models(sig, 3, 31, 8)) {
    Evaluator ev(sig, m);
    CHECK(ev.check_equation(make_equation(sig, one, two, Strength::Strong))
              .holds);
    // both orders propagate the E3 exception itself
    const FnTable& t = ev.eval(one);
    for (std::size_t i = 0; i < t.inputs.size(); ++i)
      if (t.inputs[i].is_ord())
        CHECK(t.outputs[i] ==
              LiftedValue::exceptional(ExcValue{"E3", t.inputs[i].ord}));
  }
}

TEST_CASE("every judgment of every shipped script holds in every model") {
  Signature sig = f1();
  std::vector<Equation> judgments;
  for (const auto& script : shipped_scripts(sig)) {
    ProofVerdict v = check_proof(sig, script, [&](const Judgment& j) {
      judgments.push_back(j.equation());
    });
    CAPTURE(script.title);
    CAPTURE(to_string(v));
    REQUIRE(v.ok);
  }
  CHECK(judgments.size() > 100);
  for (const auto& m : f1_models()) {
    Evaluator ev(sig, m);
    for (const auto& eq : judgments) {
      Verdict v = ev.check_equation(eq);
      CAPTURE(m.id);
      CAPTURE(to_string(eq));
      CHECK(v.holds);
    }
  }
}

TEST_CASE("shipped scripts replay over random signatures") {
  Rng rng(314);
  for (int trial = 0; trial < 6; ++trial) {
    Signature sig = random_signature(rng);
    for (const auto& script : shipped_scripts(sig)) {
      ProofVerdict v = check_proof(sig, script);
      CAPTURE(trial);
      CAPTURE(script.title);
      CAPTURE(to_string(v));
      CHECK(v.ok);
    }
  }
}

TEST_CASE("the shipped .prf files replay through the kernel") {
  Signature sig = f1();
  namespace fs = std::filesystem;
  int found = 0;
  for (const auto& entry : fs::directory_iterator(DEX_THEOREMS_DIR)) {
    if (entry.path().extension() != ".prf") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    ProofScript script =
        parse_proof(sig, buf.str(), entry.path().stem().string());
    ProofVerdict v = check_proof(sig, script);
    CAPTURE(script.title);
    CAPTURE(to_string(v));
    CHECK(v.ok);
    ++found;
  }
  CHECK(found >= 6);
}

TEST_CASE("fuzz harness runs clean and deterministically") {
  Signature sig = f1();
  FuzzOptions opt;
  opt.models = 4;
  opt.terms = 40;
  opt.seed = 42;
  FuzzReport a = fuzz_soundness(sig, opt);
  CAPTURE(a.to_text());
  CHECK(a.ok());
  CHECK(a.agreement_cases > 0);
  CHECK(a.propagation_checks > 0);
  CHECK(a.purity_checks > 0);
  CHECK(a.collapse_checks > 0);
  CHECK(a.judgment_checks > 0);

  FuzzReport b = fuzz_soundness(sig, opt);
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("fuzzing a signature without exceptions covers the pure fragment") {
  Signature sig = parse_signature("type B\nop f : B -> B\n");
  FuzzOptions opt;
  opt.models = 3;
  opt.terms = 20;
  opt.seed = 9;
  FuzzReport rep = fuzz_soundness(sig, opt);
  CHECK(rep.ok());
  CHECK(rep.agreement_cases == 0);  // no try-catch to compare
  CHECK(rep.purity_checks > 0);
}

TEST_CASE("the scan-order mutation is caught by the differential oracle") {
  Signature sig = f1();
  FuzzOptions opt;
  opt.models = 4;
  opt.terms = 60;
  opt.seed = 42;
  opt.scan_order = ScanOrder::Reversed;
  FuzzReport rep = fuzz_soundness(sig, opt);
  CHECK_FALSE(rep.ok());
}
