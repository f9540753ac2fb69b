#include "dex/kernel.hpp"

#include <algorithm>

#include "dex/error.hpp"

namespace dex {

namespace {

using AK = RuleArg::Kind;

const std::vector<RuleInfo> kCatalog = {
    // identity / composition laws
    {"refl-strong", 0, {AK::Term}},
    {"refl-weak", 0, {AK::Term}},
    {"sym-strong", 1, {}},
    {"sym-weak", 1, {}},
    {"trans-strong", 2, {}},
    {"trans-weak", 2, {}},
    {"unit-right", 0, {AK::Term}},
    {"unit-left", 0, {AK::Term}},
    {"assoc", 0, {AK::Term, AK::Term, AK::Term}},
    // strength conversions
    {"strong-to-weak", 1, {}},
    {"ppg-weak-to-strong", 1, {}},
    // congruence
    {"strong-subst", 1, {AK::Term}},
    {"strong-repl", 1, {AK::Term}},
    {"weak-subst", 1, {AK::Term}},
    {"weak-repl", 1, {AK::Term}},
    // initial type and constitutive coproduct
    {"weak-initial", 0, {AK::Term}},
    {"ccot-beta", 0, {AK::Term, AK::Name}},
    {"ccot-unique", -1, {AK::Term, AK::Term}},
    // downcast and the decorated coproduct X = X+0
    {"down-weak", 0, {AK::Term}},
    {"dcot-weak", 0, {AK::Term, AK::Term}},
    {"dcot-beta", 0, {AK::Term, AK::Term}},
    {"dcot-unique", 2, {}},
    // binary coproducts: semi-pure and propagator-level cotuples
    {"scot-weak-left", 0, {AK::Term, AK::Term}},
    {"scot-strong-right", 0, {AK::Term, AK::Term}},
    {"scot-unique", 2, {}},
    {"scot-ppg-left", 0, {AK::Term, AK::Term}},
    {"scot-ppg-unique", 2, {}},
    {"down-ppg-collapse", 0, {AK::Term, AK::Term}},
    // axioms
    {"axm-untag-tag", 0, {AK::Name}},
    {"axm-untag-other", 0, {AK::Name, AK::Name}},
    {"axm-pure", 0, {AK::Name}},
};

}  // namespace

const std::vector<RuleInfo>& Kernel::catalog() { return kCatalog; }

const RuleInfo* Kernel::find_rule(const std::string& name) {
  for (const auto& r : kCatalog)
    if (r.name == name) return &r;
  return nullptr;
}

Kernel::Kernel(const Signature& sig) : sig_(sig) {}

void Kernel::require(bool cond, const std::string& reason) {
  if (!cond) throw KernelError(reason);
}

void Kernel::require_at_most(const TermPtr& t, Decoration d,
                             const std::string& who) {
  if (!check_at(sig_, t, d))
    throw KernelError(who + " must be at most " + to_string(d) + ": " +
                      to_string(t) + " infers " + to_string(infer(sig_, t)));
}

TermPtr Kernel::prepare(const TermPtr& t) {
  TermPtr core = resolve_types(sig_, elaborate(sig_, t));
  typecheck(sig_, *core);
  return core;
}

Judgment Kernel::mint(TermPtr lhs, TermPtr rhs, Strength strength) {
  Equation eq = make_equation(sig_, std::move(lhs), std::move(rhs), strength);
  infer(sig_, eq.lhs);  // both sides must be decoration-well-formed
  infer(sig_, eq.rhs);
  Judgment j(std::move(eq));
  if (listener_) listener_(j);
  return j;
}

Judgment Kernel::apply(const std::string& rule,
                       const std::vector<Judgment>& premises,
                       const std::vector<RuleArg>& args) {
  const RuleInfo* info = find_rule(rule);
  require(info != nullptr, "unknown rule: " + rule);
  int want = info->premises;
  if (want == -1) want = static_cast<int>(sig_.exceptions.size());
  require(static_cast<int>(premises.size()) == want,
          rule + " expects " + std::to_string(want) + " premise(s), got " +
              std::to_string(premises.size()));
  require(args.size() == info->args.size(),
          rule + " expects " + std::to_string(info->args.size()) +
              " argument(s), got " + std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i)
    require(args[i].kind == info->args[i],
            rule + ": argument " + std::to_string(i + 1) + " has the wrong kind");

  auto term_arg = [&](std::size_t i) { return prepare(args[i].term); };
  auto name_arg = [&](std::size_t i) { return args[i].name; };
  auto eq_of = [&](std::size_t i) -> const Equation& {
    return premises[i].equation();
  };
  auto strong = [&](std::size_t i) {
    require(eq_of(i).strength == Strength::Strong,
            rule + ": premise " + std::to_string(i + 1) +
                " must be a strong equation");
  };
  auto weak = [&](std::size_t i) {
    require(eq_of(i).strength == Strength::Weak,
            rule + ": premise " + std::to_string(i + 1) +
                " must be a weak equation");
  };
  auto need_exception = [&](const std::string& n) {
    require(sig_.find_exception(n) != nullptr, "unknown exception: " + n);
  };

  if (rule == "refl-strong") {
    TermPtr f = term_arg(0);
    return mint(f, f, Strength::Strong);
  }
  if (rule == "refl-weak") {
    TermPtr f = term_arg(0);
    return mint(f, f, Strength::Weak);
  }
  if (rule == "sym-strong" || rule == "sym-weak") {
    rule == "sym-strong" ? strong(0) : weak(0);
    const Equation& e = eq_of(0);
    return mint(e.rhs, e.lhs, e.strength);
  }
  if (rule == "trans-strong" || rule == "trans-weak") {
    bool st = rule == "trans-strong";
    st ? strong(0) : weak(0);
    st ? strong(1) : weak(1);
    require(equal(eq_of(0).rhs, eq_of(1).lhs),
            rule + ": middle terms differ: " + to_string(eq_of(0).rhs) +
                " vs " + to_string(eq_of(1).lhs));
    return mint(eq_of(0).lhs, eq_of(1).rhs, eq_of(0).strength);
  }
  if (rule == "unit-right") {
    TermPtr f = term_arg(0);
    Ty dom = resolve(sig_, typecheck(sig_, f).dom);
    return mint(Term::compose(f, Term::id(dom)), f, Strength::Strong);
  }
  if (rule == "unit-left") {
    TermPtr f = term_arg(0);
    Ty cod = resolve(sig_, typecheck(sig_, f).cod);
    return mint(Term::compose(Term::id(cod), f), f, Strength::Strong);
  }
  if (rule == "assoc") {
    TermPtr f = term_arg(0), g = term_arg(1), h = term_arg(2);
    return mint(Term::compose(h, Term::compose(g, f)),
                Term::compose(Term::compose(h, g), f), Strength::Strong);
  }
  if (rule == "strong-to-weak") {
    strong(0);
    return mint(eq_of(0).lhs, eq_of(0).rhs, Strength::Weak);
  }
  if (rule == "ppg-weak-to-strong") {
    weak(0);
    require_at_most(eq_of(0).lhs, Decoration::Propagator, "left term");
    require_at_most(eq_of(0).rhs, Decoration::Propagator, "right term");
    return mint(eq_of(0).lhs, eq_of(0).rhs, Strength::Strong);
  }
  if (rule == "strong-subst" || rule == "weak-subst") {
    bool st = rule == "strong-subst";
    st ? strong(0) : weak(0);
    TermPtr f = term_arg(0);
    if (!st)
      require_at_most(f, Decoration::Pure, "weak substitution factor");
    return mint(Term::compose(eq_of(0).lhs, f), Term::compose(eq_of(0).rhs, f),
                eq_of(0).strength);
  }
  if (rule == "strong-repl" || rule == "weak-repl") {
    (rule == "strong-repl") ? strong(0) : weak(0);
    TermPtr g = term_arg(0);
    return mint(Term::compose(g, eq_of(0).lhs), Term::compose(g, eq_of(0).rhs),
                eq_of(0).strength);
  }
  if (rule == "weak-initial") {
    TermPtr f = term_arg(0);
    Typing t = typecheck(sig_, f);
    require(resolve(sig_, t.dom).is_empty(),
            "weak-initial: the term must start from 0");
    return mint(f, Term::empty_map(resolve(sig_, t.cod)), Strength::Weak);
  }
  if (rule == "ccot-beta") {
    TermPtr family = term_arg(0);
    require(family->kind == Term::Kind::CCotuple,
            "ccot-beta: first argument must be a ccot term");
    std::string i = name_arg(1);
    need_exception(i);
    for (const auto& [index, component] : family->arms)
      if (index == i)
        return mint(Term::compose(family, Term::tag(i)), component,
                    Strength::Weak);
    throw KernelError("ccot-beta: no component for " + i);
  }
  if (rule == "ccot-unique") {
    TermPtr f = term_arg(0);
    TermPtr family = term_arg(1);
    require(family->kind == Term::Kind::CCotuple,
            "ccot-unique: second argument must be a ccot term");
    for (std::size_t n = 0; n < sig_.exceptions.size(); ++n) {
      weak(n);
      const Equation& e = eq_of(n);
      const std::string& index = sig_.exceptions[n].name;
      TermPtr expect = Term::compose(f, Term::tag(index));
      require(equal(e.lhs, expect),
              "ccot-unique: premise " + std::to_string(n + 1) +
                  " must be " + to_string(expect) + " ~~ component");
      require(equal(e.rhs, family->arms[n].second),
              "ccot-unique: premise " + std::to_string(n + 1) +
                  " right side must be the " + index + " component");
    }
    return mint(f, family, Strength::Strong);
  }
  if (rule == "down-weak") {
    TermPtr k = term_arg(0);
    return mint(Term::downcast(k), k, Strength::Weak);
  }
  if (rule == "dcot-weak") {
    TermPtr g = term_arg(0), k = term_arg(1);
    return mint(Term::dcotuple(g, k), g, Strength::Weak);
  }
  if (rule == "dcot-beta") {
    TermPtr g = term_arg(0), k = term_arg(1);
    Ty dom = resolve(sig_, typecheck(sig_, g).dom);
    return mint(Term::compose(Term::dcotuple(g, k), Term::empty_map(dom)), k,
                Strength::Strong);
  }
  if (rule == "dcot-unique") {
    weak(0);
    strong(1);
    const Equation& fg = eq_of(0);   // f ~ g
    const Equation& fk = eq_of(1);   // f . empty[X] == k
    const TermPtr& f = fg.lhs;
    require(fk.lhs->kind == Term::Kind::Compose &&
                fk.lhs->child_b->kind == Term::Kind::EmptyMap &&
                equal(fk.lhs->child_a, f),
            "dcot-unique: second premise must have the form " + to_string(f) +
                " . empty[X] == k");
    return mint(f, Term::dcotuple(fg.rhs, fk.rhs), Strength::Strong);
  }
  if (rule == "scot-weak-left" || rule == "scot-ppg-left" ||
      rule == "scot-strong-right") {
    TermPtr f = term_arg(0), k = term_arg(1);
    Ty a = resolve(sig_, typecheck(sig_, f).dom);
    Ty b = resolve(sig_, typecheck(sig_, k).dom);
    TermPtr cot = Term::scotuple(f, k);
    if (rule == "scot-strong-right")
      return mint(Term::compose(cot, Term::inr(a, b)), k, Strength::Strong);
    if (rule == "scot-ppg-left") {
      require_at_most(k, Decoration::Propagator, "scot-ppg-left second slot");
      return mint(Term::compose(cot, Term::inl(a, b)), f, Strength::Strong);
    }
    return mint(Term::compose(cot, Term::inl(a, b)), f, Strength::Weak);
  }
  if (rule == "scot-unique" || rule == "scot-ppg-unique") {
    bool ppg = rule == "scot-ppg-unique";
    ppg ? strong(0) : weak(0);
    strong(1);
    const Equation& left = eq_of(0);   // h . inl ==/~~ f
    const Equation& right = eq_of(1);  // h . inr == k
    auto shaped = [&](const Equation& e, Term::Kind inj) {
      return e.lhs->kind == Term::Kind::Compose &&
             e.lhs->child_b->kind == inj;
    };
    require(shaped(left, Term::Kind::Inl),
            rule + ": first premise must be h . inl[A,B] vs f");
    require(shaped(right, Term::Kind::Inr),
            rule + ": second premise must be h . inr[A,B] vs k");
    const TermPtr& h = left.lhs->child_a;
    require(equal(h, right.lhs->child_a),
            rule + ": premises constrain different terms");
    require(left.lhs->child_b->ty_a == right.lhs->child_b->ty_a &&
                left.lhs->child_b->ty_b == right.lhs->child_b->ty_b,
            rule + ": coprojections range over different sums");
    if (ppg) {
      require_at_most(h, Decoration::Propagator, "scot-ppg-unique subject");
      require_at_most(right.rhs, Decoration::Propagator,
                      "scot-ppg-unique second component");
    }
    return mint(h, Term::scotuple(left.rhs, right.rhs), Strength::Strong);
  }
  if (rule == "down-ppg-collapse") {
    TermPtr f = term_arg(0), g = term_arg(1);
    require_at_most(g, Decoration::Propagator, "down-ppg-collapse second slot");
    TermPtr cot = Term::scotuple(f, g);
    return mint(Term::downcast(cot), cot, Strength::Strong);
  }
  if (rule == "axm-untag-tag") {
    std::string i = name_arg(0);
    need_exception(i);
    Ty p = resolve(sig_, Ty::param(i));
    return mint(Term::compose(Term::untag(i), Term::tag(i)), Term::id(p),
                Strength::Weak);
  }
  if (rule == "axm-untag-other") {
    std::string i = name_arg(0), j = name_arg(1);
    need_exception(i);
    need_exception(j);
    require(i != j, "axm-untag-other: indices must differ");
    Ty p = resolve(sig_, Ty::param(i));
    return mint(Term::compose(Term::untag(i), Term::tag(j)),
                Term::compose(Term::empty_map(p), Term::tag(j)),
                Strength::Weak);
  }
  if (rule == "axm-pure") {
    const NamedEquation* ax = sig_.find_axiom(name_arg(0));
    require(ax != nullptr, "unknown pure axiom: " + name_arg(0));
    return mint(prepare(ax->eq.lhs), prepare(ax->eq.rhs), Strength::Strong);
  }
  throw KernelError("rule not implemented: " + rule);
}

}  // namespace dex
