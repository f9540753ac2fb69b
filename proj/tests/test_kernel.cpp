#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <type_traits>

#include "dex/error.hpp"
#include "dex/kernel.hpp"
#include "dex/proof.hpp"
#include "dex/signature.hpp"

using namespace dex;

namespace {

Signature f1() {
  return parse_signature(
      "type B\n"
      "op f : B -> B\n"
      "exception E1 of B\n"
      "exception E2 of B\n"
      "axiom triple : f . f . f == f @ pure\n");
}

}  // namespace

// judgments exist only through rule application
static_assert(!std::is_constructible_v<Judgment>);
static_assert(!std::is_constructible_v<Judgment, Equation>);

TEST_CASE("reflexivity mints a trivial judgment") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment j = kernel.apply("refl-strong", {},
                            {RuleArg::of(Term::id(Ty::base("B")))});
  CHECK(to_string(j.equation()) == "id[B] == id[B]");
}

TEST_CASE("the listener sees every minted judgment") {
  Signature sig = f1();
  Kernel kernel(sig);
  int seen = 0;
  kernel.set_listener([&](const Judgment&) { ++seen; });
  kernel.apply("refl-weak", {}, {RuleArg::of(Term::tag("E1"))});
  kernel.apply("axm-untag-tag", {}, {RuleArg::of(std::string("E1"))});
  CHECK(seen == 2);
}

TEST_CASE("the axioms land with their stated shapes") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment ut =
      kernel.apply("axm-untag-tag", {}, {RuleArg::of(std::string("E1"))});
  CHECK(to_string(ut.equation()) == "untag[E1] . tag[E1] ~~ id[B]");

  Judgment uo = kernel.apply(
      "axm-untag-other", {},
      {RuleArg::of(std::string("E1")), RuleArg::of(std::string("E2"))});
  CHECK(to_string(uo.equation()) ==
        "untag[E1] . tag[E2] ~~ empty[B] . tag[E2]");
  CHECK_THROWS_AS(
      kernel.apply("axm-untag-other", {},
                   {RuleArg::of(std::string("E1")), RuleArg::of(std::string("E1"))}),
      KernelError);

  Judgment pure =
      kernel.apply("axm-pure", {}, {RuleArg::of(std::string("triple"))});
  CHECK(pure.equation().strength == Strength::Strong);
  CHECK_THROWS_AS(kernel.apply("axm-pure", {}, {RuleArg::of(std::string("nope"))}),
                  KernelError);
}

TEST_CASE("weak-to-strong promotion demands propagators") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment weak_axiom =
      kernel.apply("axm-untag-tag", {}, {RuleArg::of(std::string("E1"))});
  // untag . tag infers Catcher, so the promotion must be rejected
  CHECK_THROWS_WITH_AS(kernel.apply("ppg-weak-to-strong", {weak_axiom}, {}),
                       doctest::Contains("must be at most ppg"), KernelError);

  Judgment tag_weak = kernel.apply("refl-weak", {}, {RuleArg::of(Term::tag("E1"))});
  CHECK_NOTHROW(kernel.apply("ppg-weak-to-strong", {tag_weak}, {}));
}

TEST_CASE("weak substitution demands a pure factor") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment premise =
      kernel.apply("axm-untag-tag", {}, {RuleArg::of(std::string("E1"))});
  // premise : untag[E1] . tag[E1] ~~ id[B], both sides B -> B
  CHECK_NOTHROW(
      kernel.apply("weak-subst", {premise}, {RuleArg::of(Term::op("f"))}));
  // a propagator factor is rejected even though it would typecheck
  CHECK_THROWS_WITH_AS(
      kernel.apply("weak-subst", {premise},
                   {RuleArg::of(Term::throw_("E1", Ty::base("B")))}),
      doctest::Contains("must be at most pure"), KernelError);
  // the paper's own counter-instance: tagging as the substituted factor
  Judgment from_empty =
      kernel.apply("weak-initial", {}, {RuleArg::of(Term::untag("E1"))});
  CHECK_THROWS_WITH_AS(
      kernel.apply("weak-subst", {from_empty}, {RuleArg::of(Term::tag("E1"))}),
      doctest::Contains("must be at most pure"), KernelError);
  // weak replacement carries no such restriction
  CHECK_NOTHROW(kernel.apply("weak-repl", {premise},
                             {RuleArg::of(Term::throw_("E2", Ty::base("B")))}));
}

TEST_CASE("strong substitution and replacement compose the factor") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment refl = kernel.apply(
      "refl-strong", {}, {RuleArg::of(Term::op("f"))});
  Judgment subst =
      kernel.apply("strong-subst", {refl}, {RuleArg::of(Term::op("f"))});
  CHECK(to_string(subst.equation()) == "f . f == f . f");
  Judgment repl =
      kernel.apply("strong-repl", {refl}, {RuleArg::of(Term::op("f"))});
  CHECK(to_string(repl.equation()) == "f . f == f . f");
}

TEST_CASE("unit and associativity laws") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment ur = kernel.apply("unit-right", {}, {RuleArg::of(Term::tag("E1"))});
  CHECK(to_string(ur.equation()) == "tag[E1] . id[B] == tag[E1]");
  Judgment ul = kernel.apply("unit-left", {}, {RuleArg::of(Term::tag("E1"))});
  CHECK(to_string(ul.equation()) == "id[0] . tag[E1] == tag[E1]");
  Judgment as = kernel.apply("assoc", {},
                             {RuleArg::of(Term::op("f")),
                              RuleArg::of(Term::op("f")),
                              RuleArg::of(Term::op("f"))});
  CHECK(to_string(as.equation()) == "f . f . f == (f . f) . f");
}

TEST_CASE("transitivity requires matching middles") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment a = kernel.apply("refl-strong", {}, {RuleArg::of(Term::op("f"))});
  Judgment b = kernel.apply("refl-strong", {},
                            {RuleArg::of(Term::id(Ty::base("B")))});
  CHECK_THROWS_WITH_AS(kernel.apply("trans-strong", {a, b}, {}),
                       doctest::Contains("middle terms differ"), KernelError);
  CHECK_NOTHROW(kernel.apply("trans-strong", {a, a}, {}));
  // strength of premises is checked
  Judgment w = kernel.apply("refl-weak", {}, {RuleArg::of(Term::op("f"))});
  CHECK_THROWS_AS(kernel.apply("trans-strong", {a, w}, {}), KernelError);
}

TEST_CASE("weak initiality applies only to maps from the empty type") {
  Signature sig = f1();
  Kernel kernel(sig);
  Judgment j =
      kernel.apply("weak-initial", {}, {RuleArg::of(Term::untag("E1"))});
  CHECK(to_string(j.equation()) == "untag[E1] ~~ empty[B]");
  CHECK_THROWS_AS(kernel.apply("weak-initial", {}, {RuleArg::of(Term::op("f"))}),
                  KernelError);
}

TEST_CASE("constitutive cotuple rules") {
  Signature sig = f1();
  Kernel kernel(sig);
  Ty b = Ty::base("B");
  TermPtr family =
      Term::ccotuple({{"E1", Term::id(b)}, {"E2", Term::op("f")}});

  Judgment beta = kernel.apply(
      "ccot-beta", {},
      {RuleArg::of(family), RuleArg::of(std::string("E2"))});
  CHECK(to_string(beta.equation()) ==
        "ccot{E1 => id[B], E2 => f} . tag[E2] ~~ f");

  // uniqueness needs one premise per exception, in declaration order
  TermPtr subject = Term::ccotuple({{"E1", Term::id(b)}, {"E2", Term::op("f")}});
  Judgment p1 = kernel.apply("ccot-beta", {},
                             {RuleArg::of(subject), RuleArg::of(std::string("E1"))});
  Judgment p2 = kernel.apply("ccot-beta", {},
                             {RuleArg::of(subject), RuleArg::of(std::string("E2"))});
  Judgment uq = kernel.apply("ccot-unique", {p1, p2},
                             {RuleArg::of(subject), RuleArg::of(family)});
  CHECK(uq.equation().strength == Strength::Strong);
  CHECK_THROWS_AS(kernel.apply("ccot-unique", {p1},
                               {RuleArg::of(subject), RuleArg::of(family)}),
                  KernelError);

  // a catcher component is rejected by the formation check
  TermPtr bad = Term::ccotuple(
      {{"E1", Term::compose(Term::untag("E1"), Term::tag("E1"))},
       {"E2", Term::id(b)}});
  CHECK_THROWS_AS(
      kernel.apply("ccot-beta", {},
                   {RuleArg::of(bad), RuleArg::of(std::string("E1"))}),
      DecorationError);
}

TEST_CASE("decorated coproduct rules") {
  Signature sig = f1();
  Kernel kernel(sig);
  Ty b = Ty::base("B");
  TermPtr g = Term::op("f");
  TermPtr k = Term::compose(Term::throw_("E2", b), Term::untag("E1"));

  Judgment weak = kernel.apply("dcot-weak", {},
                               {RuleArg::of(g), RuleArg::of(k)});
  CHECK(to_string(weak.equation()) ==
        "dcot(f | (empty[B] . tag[E2]) . untag[E1]) ~~ f");

  Judgment beta = kernel.apply("dcot-beta", {},
                               {RuleArg::of(g), RuleArg::of(k)});
  CHECK(beta.equation().strength == Strength::Strong);

  // dcot demands a propagator in its first slot
  TermPtr catcher = Term::compose(Term::untag("E1"), Term::tag("E1"));
  CHECK_THROWS_AS(kernel.apply("dcot-weak", {},
                               {RuleArg::of(catcher), RuleArg::of(k)}),
                  DecorationError);
}

TEST_CASE("downcast collapses over propagator cotuples") {
  Signature sig = f1();
  Kernel kernel(sig);
  Ty b = Ty::base("B");
  Judgment j = kernel.apply(
      "down-ppg-collapse", {},
      {RuleArg::of(Term::op("f")), RuleArg::of(Term::throw_("E1", b))});
  CHECK(to_string(j.equation()) ==
        "down(scot(f | empty[B] . tag[E1])) == scot(f | empty[B] . tag[E1])");
  CHECK_THROWS_AS(
      kernel.apply("down-ppg-collapse", {},
                   {RuleArg::of(Term::op("f")), RuleArg::of(Term::untag("E1"))}),
      KernelError);
}

TEST_CASE("rule arity and argument kinds are validated") {
  Signature sig = f1();
  Kernel kernel(sig);
  CHECK_THROWS_AS(kernel.apply("no-such-rule", {}, {}), KernelError);
  CHECK_THROWS_AS(kernel.apply("refl-strong", {}, {}), KernelError);
  CHECK_THROWS_AS(
      kernel.apply("refl-strong", {}, {RuleArg::of(std::string("E1"))}),
      KernelError);
}

TEST_CASE("proof files parse, print, and replay") {
  Signature sig = f1();
  std::string text =
      "# a tiny replay\n"
      "goal untag[E1] . tag[E1] ~~ id[B]\n"
      "step a = axm-untag-tag(E1)\n"
      "qed a\n";
  ProofScript script = parse_proof(sig, text, "tiny");
  ProofVerdict verdict = check_proof(sig, script);
  CHECK(verdict.ok);
  REQUIRE(verdict.final.has_value());
  CHECK(to_string(*verdict.final) == "untag[E1] . tag[E1] ~~ id[B]");

  ProofScript again = parse_proof(sig, print_proof(script), "tiny");
  CHECK(check_proof(sig, again).ok);
}

TEST_CASE("a weak derivation cannot discharge a strong goal") {
  Signature sig = f1();
  std::string text =
      "goal untag[E1] . tag[E1] == id[B]\n"
      "step a = axm-untag-tag(E1)\n"
      "qed a\n";
  ProofVerdict verdict = check_proof(sig, parse_proof(sig, text));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.reason.find("strength mismatch") != std::string::npos);
}

TEST_CASE("rejections name the failing step") {
  Signature sig = f1();
  std::string text =
      "goal f . untag[E1] . tag[E1] ~~ f . id[B]\n"
      "step a = axm-untag-tag(E1)\n"
      "step b = weak-subst(tag[E1]) from a\n"
      "qed b\n";
  ProofVerdict verdict = check_proof(sig, parse_proof(sig, text));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.step == "b");
  CHECK(verdict.reason.find("pure") != std::string::npos);
}

TEST_CASE("proofs may not reference later or missing steps") {
  Signature sig = f1();
  std::string text =
      "goal untag[E1] . tag[E1] ~~ id[B]\n"
      "step b = sym-weak() from zzz\n"
      "qed b\n";
  ProofVerdict verdict = check_proof(sig, parse_proof(sig, text));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.reason.find("unknown premise") != std::string::npos);
}

TEST_CASE("malformed proof files raise parse errors") {
  Signature sig = f1();
  CHECK_THROWS_AS(parse_proof(sig, "step a = refl-strong(id[B])\nqed a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_proof(sig, "goal f == f\n"), ParseError);
  CHECK_THROWS_AS(
      parse_proof(sig, "goal f == f\nstep a = mystery(f)\nqed a\n"),
      ParseError);
}
