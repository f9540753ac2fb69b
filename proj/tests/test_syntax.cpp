#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dex/error.hpp"
#include "dex/rng.hpp"
#include "dex/signature.hpp"
#include "dex/term.hpp"
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

}  // namespace

TEST_CASE("minimal declaration") {
  Signature sig = parse_signature("type U\nexception Err of U\n");
  CHECK(sig.base_types.size() == 1);
  CHECK(sig.exceptions.size() == 1);
  CHECK(sig.exceptions[0].name == "Err");
  CHECK(sig.exceptions[0].param == Ty::base("U"));
}

TEST_CASE("fixture F1 parses and round-trips") {
  Signature sig = f1();
  CHECK(sig.ops.size() == 1);
  CHECK(sig.ops[0].name == "f");
  CHECK(sig.exceptions.size() == 2);
  CHECK(*sig.exception_index("E2") == 1);

  std::string printed = print_signature(sig);
  Signature again = parse_signature(printed);
  CHECK(print_signature(again) == printed);
  CHECK(again.base_types == sig.base_types);
  CHECK(again.exceptions.size() == sig.exceptions.size());
}

TEST_CASE("undeclared parameter type is rejected") {
  CHECK_THROWS_AS(parse_signature("exception E of Missing\n"), ParseError);
}

TEST_CASE("duplicate declarations are rejected") {
  CHECK_THROWS_AS(parse_signature("type B\ntype B\n"), ParseError);
  CHECK_THROWS_AS(
      parse_signature("type B\nexception E of B\nexception E of B\n"),
      ParseError);
  CHECK_THROWS_AS(parse_signature("type B\nop f : B -> B\nop f : B -> B\n"),
                  ParseError);
}

TEST_CASE("op types must be declared base types") {
  CHECK_THROWS_AS(parse_signature("type B\nop f : B -> C\n"), ParseError);
  CHECK_THROWS_AS(
      parse_signature("type B\nexception E of B\nop f : P[E] -> B\n"),
      ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_signature("type B\nop f :\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("typing of the public operations") {
  Signature sig = f1();
  Typing t = typecheck(sig, Term::throw_("E1", Ty::base("B")));
  CHECK(t.dom == Ty::param("E1"));
  CHECK(t.cod == Ty::base("B"));

  Typing u = typecheck(
      sig, Term::compose(Term::untag("E1"), Term::tag("E1")));
  CHECK(u.dom == Ty::param("E1"));
  CHECK(u.cod == Ty::param("E1"));

  CHECK_THROWS_AS(
      typecheck(sig, Term::compose(Term::tag("E1"), Term::tag("E1"))),
      TypeError);
  CHECK_THROWS_AS(typecheck(sig, *Term::op("nope")), TypeError);
}

TEST_CASE("handler codomain must match the try codomain") {
  Signature sig = parse_signature(
      "type A\ntype B\nop f : A -> B\nop g : A -> A\nexception E of A\n");
  TermPtr bad = Term::try_(Term::op("f"), {{"E", Term::op("g")}});
  CHECK_THROWS_AS(typecheck(sig, bad), TypeError);
}

TEST_CASE("throw elaborates to the empty map after tagging") {
  Signature sig = f1();
  TermPtr expanded = elaborate(sig, Term::throw_("E1", Ty::base("B")));
  TermPtr expected =
      Term::compose(Term::empty_map(Ty::base("B")), Term::tag("E1"));
  CHECK(equal(expanded, expected));
}

TEST_CASE("single-handler try elaborates to the downcast form") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  TermPtr f = Term::op("f");
  TermPtr body = Term::compose(f, Term::throw_("E1", b));  // P[E1] -> B
  TermPtr sugar = Term::try_(body, {{"E1", Term::id(b)}});

  // down(dcot(id[B] | dcot(id[B] | empty[B]) . untag[E1]) . elaborate(body))
  TermPtr k1 = Term::compose(
      Term::dcotuple(Term::id(b), Term::empty_map(b)), Term::untag("E1"));
  TermPtr expected = Term::downcast(Term::compose(
      Term::dcotuple(Term::id(b), k1), elaborate(sig, body)));
  CHECK(equal(elaborate(sig, sugar), expected));
}

TEST_CASE("two-handler try unfolds the recursion without collapsing") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  TermPtr g = Term::id(b);
  TermPtr h = Term::op("f");
  TermPtr body = Term::throw_("E1", b);
  TermPtr sugar = Term::try_(body, {{"E1", g}, {"E2", h}});

  // hand-unfolded: k2 = dcot(h | empty[B]) . untag[E2],
  //                k1 = dcot(g | k2) . untag[E1]
  TermPtr k2 = Term::compose(Term::dcotuple(h, Term::empty_map(b)),
                             Term::untag("E2"));
  TermPtr k1 = Term::compose(Term::dcotuple(g, k2), Term::untag("E1"));
  TermPtr expected = Term::downcast(Term::compose(
      Term::dcotuple(Term::id(b), k1), elaborate(sig, body)));
  CHECK(equal(elaborate(sig, sugar), expected));
}

TEST_CASE("try handler list must be non-empty") {
  Signature sig = f1();
  TermPtr bad = Term::try_(Term::op("f"), {});
  CHECK_THROWS_AS(typecheck(sig, bad), TypeError);
}

TEST_CASE("repeated handler indices are allowed") {
  Signature sig = f1();
  TermPtr t = Term::try_(Term::op("f"),
                         {{"E1", Term::id(Ty::base("B"))},
                          {"E1", Term::op("f")}});
  CHECK_NOTHROW(typecheck(sig, t));
}

TEST_CASE("ccot must cover the declared exceptions exactly once") {
  Signature sig = f1();
  Ty b = Ty::base("B");
  CHECK_THROWS_AS(typecheck(sig, *Term::ccotuple({{"E1", Term::id(b)}})),
                  TypeError);
  CHECK_THROWS_AS(typecheck(sig, *Term::ccotuple({})), TypeError);
  TermPtr full =
      Term::ccotuple({{"E1", Term::id(b)}, {"E2", Term::id(b)}});
  CHECK_NOTHROW(typecheck(sig, full));
  // the parser reorders a permuted family into declaration order
  TermPtr parsed = parse_term(sig, "ccot{E2 => id[B], E1 => id[B]}");
  CHECK(equal(parsed, full));
}

TEST_CASE("elaboration is idempotent and preserves typing") {
  Signature sig = f1();
  Rng rng(7);
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    TermPtr t = random_any_term(sig, rng, 5);
    TermPtr once = elaborate(sig, t);
    TermPtr twice = elaborate(sig, once);
    CHECK(equal(once, twice));
    Typing a = typecheck(sig, t);
    Typing b = typecheck(sig, once);
    CHECK(same_carrier(sig, a.dom, b.dom));
    CHECK(same_carrier(sig, a.cod, b.cod));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("print then parse is the identity on terms") {
  Signature sig = f1();
  Rng rng(11);
  for (int n = 0; n < 300; ++n) {
    TermPtr t = random_any_term(sig, rng, 5);
    CAPTURE(to_string(t));
    TermPtr back = parse_term(sig, to_string(t));
    CHECK(equal(t, back));
  }
}

TEST_CASE("named terms expand at use sites") {
  Signature sig = parse_signature(
      "type B\nexception E of B\n"
      "term t = throw[E,B]\n"
      "term u = t . tag[E] . untag[E]\n");
  const NamedTerm* u = sig.find_term("u");
  REQUIRE(u != nullptr);
  // t was inlined, so u mentions no named references
  CHECK(to_string(u->term) == "throw[E,B] . tag[E] . untag[E]");
}

TEST_CASE("axiom and eq statements") {
  Signature sig = parse_signature(
      "type B\n"
      "op f : B -> B\n"
      "exception E of B\n"
      "axiom idem : f . f == f @ pure\n"
      "axiom f . f . f == f @ pure\n"
      "eq probe : down(untag[E]) == untag[E] @ strong\n"
      "eq weakly : down(untag[E]) == untag[E] @ weak\n");
  CHECK(sig.axioms.size() == 2);
  CHECK(sig.axioms[0].name == "idem");
  CHECK(sig.axioms[1].name == "ax1");
  REQUIRE(sig.find_equation("probe") != nullptr);
  CHECK(sig.find_equation("probe")->eq.strength == Strength::Strong);
  CHECK(sig.find_equation("weakly")->eq.strength == Strength::Weak);

  // a pure axiom may not mention effectful operations
  CHECK_THROWS_AS(parse_signature("type B\nexception E of B\n"
                                  "axiom tag[E] == tag[E] @ pure\n"),
                  ParseError);
  // axiom sides must be parallel
  CHECK_THROWS_AS(parse_signature("type B\ntype C\nop f : B -> B\n"
                                  "op g : C -> C\naxiom f == g @ pure\n"),
                  ParseError);
}

TEST_CASE("compose parses right-associated and prints back") {
  Signature sig = f1();
  TermPtr t = parse_term(sig, "f . f . f");
  CHECK(t->kind == Term::Kind::Compose);
  CHECK(t->child_a->kind == Term::Kind::Op);
  CHECK(t->child_b->kind == Term::Kind::Compose);
  CHECK(to_string(t) == "f . f . f");

  TermPtr left = Term::compose(Term::compose(Term::op("f"), Term::op("f")),
                               Term::op("f"));
  CHECK(to_string(left) == "(f . f) . f");
  CHECK(equal(parse_term(sig, to_string(left)), left));
}

TEST_CASE("ccot is meaningless without declared exceptions") {
  Signature sig = parse_signature("type B\n");
  CHECK_THROWS_AS(typecheck(sig, *Term::ccotuple({})), TypeError);
}
