#include "dex/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "dex/decoration.hpp"
#include "dex/error.hpp"

namespace dex {

namespace {

TermPtr comp(TermPtr g, TermPtr f) {
  return Term::compose(std::move(g), std::move(f));
}

class ScriptBuilder {
 public:
  explicit ScriptBuilder(std::string title) { script_.title = std::move(title); }

  std::string add(std::string rule, std::vector<RuleArg> args = {},
                  std::vector<std::string> premises = {}) {
    std::string name = "s" + std::to_string(++counter_);
    script_.steps.push_back(
        ProofStep{name, std::move(rule), std::move(args), std::move(premises)});
    return name;
  }

  void finish(Equation goal, std::string qed) {
    script_.goal = std::move(goal);
    script_.qed = std::move(qed);
  }

  ProofScript take() { return std::move(script_); }

 private:
  ProofScript script_;
  int counter_ = 0;
};

RuleArg T(TermPtr t) { return RuleArg::of(std::move(t)); }
RuleArg N(std::string n) { return RuleArg::of(std::move(n)); }

// dcot(g | empty[cod g]) == g, for propagator g. Returns the final step.
std::string emit_collapse(ScriptBuilder& b, const Signature& sig,
                          const TermPtr& g) {
  Ty dom = typecheck(sig, g).dom;
  std::string refl = b.add("refl-weak", {T(g)});
  std::string to_empty =
      b.add("weak-initial", {T(comp(g, Term::empty_map(dom)))});
  std::string strong = b.add("ppg-weak-to-strong", {}, {to_empty});
  std::string unique = b.add("dcot-unique", {}, {refl, strong});
  return b.add("sym-strong", {}, {unique});
}

// tag[i] . untag[i] == id[0]. Returns the final step.
std::string emit_annihilation_untag_tag(ScriptBuilder& b, const Signature& sig,
                                        const std::string& i) {
  TermPtr lhs = comp(Term::tag(i), Term::untag(i));
  Arms family_arms;
  for (const auto& exc : sig.exceptions)
    family_arms.emplace_back(exc.name, Term::tag(exc.name));
  TermPtr family = Term::ccotuple(family_arms);

  std::vector<std::string> premises;
  for (const auto& exc : sig.exceptions) {
    const std::string& j = exc.name;
    if (j == i) {
      std::string a1 = b.add("axm-untag-tag", {N(i)});
      std::string a2 = b.add("weak-repl", {T(Term::tag(i))}, {a1});
      std::string a3 = b.add("unit-right", {T(Term::tag(i))});
      std::string a4 = b.add("strong-to-weak", {}, {a3});
      std::string a5 = b.add("trans-weak", {}, {a2, a4});
      std::string a6 = b.add(
          "assoc", {T(Term::tag(i)), T(Term::untag(i)), T(Term::tag(i))});
      std::string a7 = b.add("sym-strong", {}, {a6});
      std::string a8 = b.add("strong-to-weak", {}, {a7});
      premises.push_back(b.add("trans-weak", {}, {a8, a5}));
    } else {
      TermPtr empty_pi = Term::empty_map(Ty::param(i));
      std::string b1 = b.add("axm-untag-other", {N(i), N(j)});
      std::string b2 = b.add("weak-repl", {T(Term::tag(i))}, {b1});
      std::string b3 = b.add("weak-initial", {T(comp(Term::tag(i), empty_pi))});
      std::string b4 = b.add("weak-initial", {T(Term::id(Ty::empty()))});
      std::string b5 = b.add("sym-weak", {}, {b4});
      std::string b6 = b.add("trans-weak", {}, {b3, b5});
      std::string b7 = b.add("ppg-weak-to-strong", {}, {b6});
      std::string b8 =
          b.add("assoc", {T(Term::tag(j)), T(empty_pi), T(Term::tag(i))});
      std::string b9 = b.add("strong-subst", {T(Term::tag(j))}, {b7});
      std::string b10 = b.add("unit-left", {T(Term::tag(j))});
      std::string b11 = b.add("trans-strong", {}, {b8, b9});
      std::string b12 = b.add("trans-strong", {}, {b11, b10});
      std::string b13 = b.add("strong-to-weak", {}, {b12});
      std::string b14 = b.add("trans-weak", {}, {b2, b13});
      std::string b15 = b.add(
          "assoc", {T(Term::tag(j)), T(Term::untag(i)), T(Term::tag(i))});
      std::string b16 = b.add("sym-strong", {}, {b15});
      std::string b17 = b.add("strong-to-weak", {}, {b16});
      premises.push_back(b.add("trans-weak", {}, {b17, b14}));
    }
  }
  std::string u1 = b.add("ccot-unique", {T(lhs), T(family)}, premises);

  std::vector<std::string> id_premises;
  for (const auto& exc : sig.exceptions) {
    std::string c1 = b.add("unit-left", {T(Term::tag(exc.name))});
    id_premises.push_back(b.add("strong-to-weak", {}, {c1}));
  }
  std::string u2 = b.add("ccot-unique",
                         {T(Term::id(Ty::empty())), T(family)}, id_premises);
  std::string u3 = b.add("sym-strong", {}, {u2});
  return b.add("trans-strong", {}, {u1, u3});
}

struct SumCtx {
  TermPtr q1;      // inl[P[i],P[j]]
  TermPtr q2;      // inr[P[i],P[j]]
  TermPtr id_cj;   // dcot(q1 | q2 . untag[j])   (id + untag on the right)
  TermPtr ci_id;   // dcot(q2 | q1 . untag[i])   (untag on the left + id)
  Ty sum = Ty::empty();
};

SumCtx sum_ctx(const std::string& i, const std::string& j) {
  SumCtx ctx;
  Ty pi = Ty::param(i);
  Ty pj = Ty::param(j);
  ctx.sum = Ty::sum(pi, pj);
  ctx.q1 = Term::inl(pi, pj);
  ctx.q2 = Term::inr(pi, pj);
  ctx.id_cj = Term::dcotuple(ctx.q1, comp(ctx.q2, Term::untag(j)));
  ctx.ci_id = Term::dcotuple(ctx.q2, comp(ctx.q1, Term::untag(i)));
  return ctx;
}

// scot(g | h) . dcot(q1 | q2 . untag[j]) == dcot(g | h . untag[j]).
std::string emit_aux_cotuple_sum(ScriptBuilder& b, const TermPtr& g,
                                 const std::string& i, const TermPtr& h,
                                 const std::string& j) {
  SumCtx ctx = sum_ctx(i, j);
  TermPtr cot = Term::scotuple(g, h);
  TermPtr right_slot = comp(ctx.q2, Term::untag(j));
  std::string x1 = b.add("dcot-weak", {T(ctx.q1), T(right_slot)});
  std::string x2 = b.add("weak-repl", {T(cot)}, {x1});
  std::string x3 = b.add("scot-weak-left", {T(g), T(h)});
  std::string x4 = b.add("trans-weak", {}, {x2, x3});
  std::string x5 = b.add(
      "assoc", {T(Term::empty_map(Ty::param(i))), T(ctx.id_cj), T(cot)});
  std::string x6 = b.add("sym-strong", {}, {x5});
  std::string x7 = b.add("dcot-beta", {T(ctx.q1), T(right_slot)});
  std::string x8 = b.add("strong-repl", {T(cot)}, {x7});
  std::string x9 = b.add("assoc", {T(Term::untag(j)), T(ctx.q2), T(cot)});
  std::string x10 = b.add("scot-strong-right", {T(g), T(h)});
  std::string x11 = b.add("strong-subst", {T(Term::untag(j))}, {x10});
  std::string x12 = b.add("trans-strong", {}, {x6, x8});
  std::string x13 = b.add("trans-strong", {}, {x12, x9});
  std::string x14 = b.add("trans-strong", {}, {x13, x11});
  return b.add("dcot-unique", {}, {x4, x14});
}

// scot(g | h) . dcot(q2 | q1 . untag[i]) == dcot(h | g . untag[i]).
std::string emit_aux_cotuple_sum_mirror(ScriptBuilder& b, const TermPtr& g,
                                        const std::string& i, const TermPtr& h,
                                        const std::string& j) {
  SumCtx ctx = sum_ctx(i, j);
  TermPtr cot = Term::scotuple(g, h);
  TermPtr right_slot = comp(ctx.q1, Term::untag(i));
  std::string y1 = b.add("dcot-weak", {T(ctx.q2), T(right_slot)});
  std::string y2 = b.add("weak-repl", {T(cot)}, {y1});
  std::string y3 = b.add("scot-strong-right", {T(g), T(h)});
  std::string y4 = b.add("strong-to-weak", {}, {y3});
  std::string y5 = b.add("trans-weak", {}, {y2, y4});
  std::string y6 = b.add(
      "assoc", {T(Term::empty_map(Ty::param(j))), T(ctx.ci_id), T(cot)});
  std::string y7 = b.add("sym-strong", {}, {y6});
  std::string y8 = b.add("dcot-beta", {T(ctx.q2), T(right_slot)});
  std::string y9 = b.add("strong-repl", {T(cot)}, {y8});
  std::string y10 = b.add("assoc", {T(Term::untag(i)), T(ctx.q1), T(cot)});
  std::string y11 = b.add("scot-ppg-left", {T(g), T(h)});
  std::string y12 = b.add("strong-subst", {T(Term::untag(i))}, {y11});
  std::string y13 = b.add("trans-strong", {}, {y7, y9});
  std::string y14 = b.add("trans-strong", {}, {y13, y10});
  std::string y15 = b.add("trans-strong", {}, {y14, y12});
  return b.add("dcot-unique", {}, {y5, y15});
}

// One side of the untag-untag commutation: (D . untag[u]) == ccot family,
// where D has ordinary slot `ord` and exceptional slot `qq . untag[v]`.
std::string emit_untag_side(ScriptBuilder& b, const Signature& sig,
                            const TermPtr& D, const TermPtr& ord,
                            const TermPtr& qq, const std::string& u,
                            const std::string& v,
                            const TermPtr& family) {
  TermPtr dk = comp(qq, Term::untag(v));
  std::vector<std::string> premises;
  for (const auto& exc : sig.exceptions) {
    const std::string& k = exc.name;
    if (k == u) {
      std::string m1 = b.add("axm-untag-tag", {N(u)});
      std::string m2 = b.add("weak-repl", {T(D)}, {m1});
      std::string m3 = b.add("unit-right", {T(D)});
      std::string m4 = b.add("strong-to-weak", {}, {m3});
      std::string m5 = b.add("trans-weak", {}, {m2, m4});
      std::string m6 = b.add("dcot-weak", {T(ord), T(dk)});
      std::string m7 = b.add("trans-weak", {}, {m5, m6});
      std::string m8 =
          b.add("assoc", {T(Term::tag(u)), T(Term::untag(u)), T(D)});
      std::string m9 = b.add("sym-strong", {}, {m8});
      std::string m10 = b.add("strong-to-weak", {}, {m9});
      premises.push_back(b.add("trans-weak", {}, {m10, m7}));
      continue;
    }
    TermPtr empty_pu = Term::empty_map(Ty::param(u));
    std::string n1 = b.add("axm-untag-other", {N(u), N(k)});
    std::string n2 = b.add("weak-repl", {T(D)}, {n1});
    std::string n3 = b.add("assoc", {T(Term::tag(k)), T(empty_pu), T(D)});
    std::string n4 = b.add("dcot-beta", {T(ord), T(dk)});
    std::string n5 = b.add("strong-subst", {T(Term::tag(k))}, {n4});
    std::string n6 = b.add("assoc", {T(Term::tag(k)), T(Term::untag(v)), T(qq)});
    std::string n7 = b.add("sym-strong", {}, {n6});
    std::string tail;
    if (k == v) {
      std::string s1 = b.add("axm-untag-tag", {N(v)});
      std::string s2 = b.add("weak-repl", {T(qq)}, {s1});
      std::string s3 = b.add("unit-right", {T(qq)});
      std::string s4 = b.add("strong-to-weak", {}, {s3});
      tail = b.add("trans-weak", {}, {s2, s4});
    } else {
      TermPtr empty_pv = Term::empty_map(Ty::param(v));
      std::string w1 = b.add("axm-untag-other", {N(v), N(k)});
      std::string w2 = b.add("weak-repl", {T(qq)}, {w1});
      std::string w3 = b.add("assoc", {T(Term::tag(k)), T(empty_pv), T(qq)});
      std::string w4 = b.add("weak-initial", {T(comp(qq, empty_pv))});
      std::string w5 = b.add("ppg-weak-to-strong", {}, {w4});
      std::string w6 = b.add("strong-subst", {T(Term::tag(k))}, {w5});
      std::string w7 = b.add("trans-strong", {}, {w3, w6});
      std::string w8 = b.add("strong-to-weak", {}, {w7});
      tail = b.add("trans-weak", {}, {w2, w8});
    }
    std::string n8 = b.add("strong-to-weak", {}, {n7});
    std::string n9 = b.add("trans-weak", {}, {n8, tail});
    std::string n10 = b.add("strong-to-weak", {}, {n5});
    std::string n11 = b.add("trans-weak", {}, {n10, n9});
    std::string n12 = b.add("strong-to-weak", {}, {n3});
    std::string n13 = b.add("trans-weak", {}, {n12, n11});
    std::string n14 = b.add("trans-weak", {}, {n2, n13});
    std::string n15 =
        b.add("assoc", {T(Term::tag(k)), T(Term::untag(u)), T(D)});
    std::string n16 = b.add("sym-strong", {}, {n15});
    std::string n17 = b.add("strong-to-weak", {}, {n16});
    premises.push_back(b.add("trans-weak", {}, {n17, n14}));
  }
  return b.add("ccot-unique", {T(comp(D, Term::untag(u))), T(family)},
               premises);
}

// ci_id . untag[j] == id_cj . untag[i]. Returns the final step.
std::string emit_commutation_core(ScriptBuilder& b, const Signature& sig,
                                  const std::string& i, const std::string& j) {
  SumCtx ctx = sum_ctx(i, j);
  Arms family_arms;
  for (const auto& exc : sig.exceptions) {
    if (exc.name == i)
      family_arms.emplace_back(exc.name, ctx.q1);
    else if (exc.name == j)
      family_arms.emplace_back(exc.name, ctx.q2);
    else
      family_arms.emplace_back(
          exc.name, comp(Term::empty_map(ctx.sum), Term::tag(exc.name)));
  }
  TermPtr family = Term::ccotuple(family_arms);

  std::string left =
      emit_untag_side(b, sig, ctx.ci_id, ctx.q2, ctx.q1, j, i, family);
  std::string right =
      emit_untag_side(b, sig, ctx.id_cj, ctx.q1, ctx.q2, i, j, family);
  std::string right_sym = b.add("sym-strong", {}, {right});
  return b.add("trans-strong", {}, {left, right_sym});
}

// Rebuilds the handler chain exactly as elaborate() lays it out.
struct TryChain {
  TermPtr whole;  // down(dcot(id[Y] | k1) . body)
  TermPtr k1;
  std::vector<TermPtr> ks;  // k1..k_{n+1}
};

TryChain try_chain(const Signature& sig, const TermPtr& body, const Arms& arms) {
  Ty cod = typecheck(sig, Term::try_(body, arms)).cod;
  TryChain out;
  TermPtr k = Term::empty_map(cod);
  std::vector<TermPtr> rev = {k};
  for (auto it = arms.rbegin(); it != arms.rend(); ++it) {
    k = comp(Term::dcotuple(elaborate(sig, it->second), k),
             Term::untag(it->first));
    rev.push_back(k);
  }
  out.k1 = k;
  out.ks.assign(rev.rbegin(), rev.rend());
  out.whole = Term::downcast(
      comp(Term::dcotuple(Term::id(cod), k), elaborate(sig, body)));
  return out;
}

void require_ppg(const Signature& sig, const TermPtr& t, const char* who) {
  if (!check_at(sig, t, Decoration::Propagator))
    throw KernelError(std::string(who) + " must be a propagator: " +
                      to_string(t));
}

}  // namespace

ProofScript prove_cotuple_collapse(const Signature& sig, const TermPtr& g) {
  require_ppg(sig, g, "collapse subject");
  ScriptBuilder b("cotuple-collapse");
  TermPtr ge = elaborate(sig, g);
  Ty cod = typecheck(sig, ge).cod;
  std::string last = emit_collapse(b, sig, ge);
  b.finish(Equation{Term::dcotuple(ge, Term::empty_map(cod)), ge,
                    Strength::Strong},
           last);
  return b.take();
}

ProofScript prove_annihilation_untag_tag(const Signature& sig,
                                         const std::string& i) {
  if (!sig.find_exception(i)) throw KernelError("unknown exception: " + i);
  ScriptBuilder b("annihilation-untag-tag");
  std::string last = emit_annihilation_untag_tag(b, sig, i);
  b.finish(Equation{comp(Term::tag(i), Term::untag(i)), Term::id(Ty::empty()),
                    Strength::Strong},
           last);
  return b.take();
}

ProofScript prove_annihilation_catch_raise(const Signature& sig,
                                           const TermPtr& f,
                                           const std::string& i) {
  if (!sig.find_exception(i)) throw KernelError("unknown exception: " + i);
  require_ppg(sig, f, "catch-raise subject");
  ScriptBuilder b("annihilation-catch-raise");
  TermPtr fe = elaborate(sig, f);
  Ty cod = typecheck(sig, fe).cod;
  TermPtr idy = Term::id(cod);
  TermPtr emp = Term::empty_map(cod);
  TermPtr thr = comp(emp, Term::tag(i));  // elaborated throw[i,Y]
  TermPtr k1 = comp(Term::dcotuple(thr, emp), Term::untag(i));

  std::string col = emit_collapse(b, sig, thr);
  std::string p6 = b.add("strong-subst", {T(Term::untag(i))}, {col});
  std::string p7 = b.add("assoc", {T(Term::untag(i)), T(Term::tag(i)), T(emp)});
  std::string p8 = b.add("sym-strong", {}, {p7});
  std::string aut = emit_annihilation_untag_tag(b, sig, i);
  std::string p9 = b.add("strong-repl", {T(emp)}, {aut});
  std::string p10 = b.add("unit-right", {T(emp)});
  std::string p11 = b.add("trans-strong", {}, {p6, p8});
  std::string p12 = b.add("trans-strong", {}, {p11, p9});
  std::string p13 = b.add("trans-strong", {}, {p12, p10});
  std::string p14 = b.add("dcot-weak", {T(idy), T(k1)});
  std::string p15 = b.add("dcot-beta", {T(idy), T(k1)});
  std::string p16 = b.add("trans-strong", {}, {p15, p13});
  std::string p17 = b.add("dcot-unique", {}, {p14, p16});
  std::string p18 = b.add("refl-weak", {T(idy)});
  std::string p19 = b.add("unit-left", {T(emp)});
  std::string p20 = b.add("dcot-unique", {}, {p18, p19});
  std::string p21 = b.add("sym-strong", {}, {p20});
  std::string p22 = b.add("trans-strong", {}, {p17, p21});
  std::string p23 = b.add("strong-subst", {T(fe)}, {p22});
  std::string p24 = b.add("unit-left", {T(fe)});
  std::string p25 = b.add("trans-strong", {}, {p23, p24});
  TermPtr inner = comp(Term::dcotuple(idy, k1), fe);
  std::string p26 = b.add("down-weak", {T(inner)});
  std::string p27 = b.add("strong-to-weak", {}, {p25});
  std::string p28 = b.add("trans-weak", {}, {p26, p27});
  std::string p29 = b.add("ppg-weak-to-strong", {}, {p28});

  TermPtr goal_lhs =
      elaborate(sig, Term::try_(fe, {{i, Term::throw_(i, cod)}}));
  b.finish(Equation{goal_lhs, fe, Strength::Strong}, p29);
  return b.take();
}

ProofScript prove_commutation_untag_untag(const Signature& sig,
                                          const std::string& i,
                                          const std::string& j) {
  if (!sig.find_exception(i) || !sig.find_exception(j))
    throw KernelError("unknown exception index");
  if (i == j) throw KernelError("commutation requires two distinct indices");
  ScriptBuilder b("commutation-untag-untag");
  SumCtx ctx = sum_ctx(i, j);
  std::string last = emit_commutation_core(b, sig, i, j);
  b.finish(Equation{comp(ctx.ci_id, Term::untag(j)),
                    comp(ctx.id_cj, Term::untag(i)), Strength::Strong},
           last);
  return b.take();
}

ProofScript prove_aux_cotuple_sum(const Signature& sig, const TermPtr& g,
                                  const std::string& i, const TermPtr& h,
                                  const std::string& j) {
  if (i == j) throw KernelError("aux-cotuple-sum requires distinct indices");
  require_ppg(sig, g, "first component");
  require_ppg(sig, h, "second component");
  ScriptBuilder b("aux-cotuple-sum");
  TermPtr ge = elaborate(sig, g);
  TermPtr he = elaborate(sig, h);
  SumCtx ctx = sum_ctx(i, j);
  std::string last = emit_aux_cotuple_sum(b, ge, i, he, j);
  b.finish(Equation{comp(Term::scotuple(ge, he), ctx.id_cj),
                    Term::dcotuple(ge, comp(he, Term::untag(j))),
                    Strength::Strong},
           last);
  return b.take();
}

ProofScript prove_commutation_catch_catch(const Signature& sig,
                                          const TermPtr& f,
                                          const std::string& i,
                                          const TermPtr& g,
                                          const std::string& j,
                                          const TermPtr& h) {
  if (!sig.find_exception(i) || !sig.find_exception(j))
    throw KernelError("unknown exception index");
  if (i == j)
    throw KernelError(
        "catch-catch commutation requires distinct indices (with a repeated "
        "index the first handler shadows the second)");
  require_ppg(sig, f, "body");
  require_ppg(sig, g, "first handler");
  require_ppg(sig, h, "second handler");

  ScriptBuilder b("commutation-catch-catch");
  TermPtr fe = elaborate(sig, f);
  TermPtr ge = elaborate(sig, g);
  TermPtr he = elaborate(sig, h);
  Ty cod = typecheck(sig, fe).cod;
  TermPtr idy = Term::id(cod);
  SumCtx ctx = sum_ctx(i, j);
  TermPtr cot = Term::scotuple(ge, he);

  TryChain lhs = try_chain(sig, fe, {{i, ge}, {j, he}});
  TryChain rhs = try_chain(sig, fe, {{j, he}, {i, ge}});
  const TermPtr& k1 = lhs.k1;          // dcot(g | k2) . untag[i]
  const TermPtr& k2 = lhs.ks[1];       // dcot(h | empty) . untag[j]
  const TermPtr& k1p = rhs.k1;         // dcot(h | k2') . untag[j]
  const TermPtr& k2p = rhs.ks[1];      // dcot(g | empty) . untag[i]

  // K1 == scot(g|h) . (id_cj . untag[i])
  std::string colH = emit_collapse(b, sig, he);
  std::string sb = b.add("strong-subst", {T(Term::untag(j))}, {colH});
  std::string c1 = b.add("dcot-weak", {T(ge), T(k2)});
  std::string c2 = b.add("dcot-beta", {T(ge), T(k2)});
  std::string c3 = b.add("trans-strong", {}, {c2, sb});
  std::string c4 = b.add("dcot-unique", {}, {c1, c3});
  std::string aux = emit_aux_cotuple_sum(b, ge, i, he, j);
  std::string aux_sym = b.add("sym-strong", {}, {aux});
  std::string e1 = b.add("trans-strong", {}, {c4, aux_sym});
  std::string e2 = b.add("strong-subst", {T(Term::untag(i))}, {e1});
  std::string e3 = b.add("assoc", {T(Term::untag(i)), T(ctx.id_cj), T(cot)});
  std::string e4 = b.add("sym-strong", {}, {e3});
  std::string e5 = b.add("trans-strong", {}, {e2, e4});

  // K1' == scot(g|h) . (ci_id . untag[j])
  std::string colG = emit_collapse(b, sig, ge);
  std::string sbp = b.add("strong-subst", {T(Term::untag(i))}, {colG});
  std::string c1p = b.add("dcot-weak", {T(he), T(k2p)});
  std::string c2p = b.add("dcot-beta", {T(he), T(k2p)});
  std::string c3p = b.add("trans-strong", {}, {c2p, sbp});
  std::string c4p = b.add("dcot-unique", {}, {c1p, c3p});
  std::string auxm = emit_aux_cotuple_sum_mirror(b, ge, i, he, j);
  std::string auxm_sym = b.add("sym-strong", {}, {auxm});
  std::string e1p = b.add("trans-strong", {}, {c4p, auxm_sym});
  std::string e2p = b.add("strong-subst", {T(Term::untag(j))}, {e1p});
  std::string e3p = b.add("assoc", {T(Term::untag(j)), T(ctx.ci_id), T(cot)});
  std::string e4p = b.add("sym-strong", {}, {e3p});
  std::string e5p = b.add("trans-strong", {}, {e2p, e4p});

  // commute the untag pair under scot(g|h)
  std::string core = emit_commutation_core(b, sig, i, j);
  std::string f1 = b.add("strong-repl", {T(cot)}, {core});
  std::string f2 = b.add("trans-strong", {}, {e5p, f1});
  std::string f3 = b.add("sym-strong", {}, {f2});
  std::string f4 = b.add("trans-strong", {}, {e5, f3});

  // push K1 == K1' through dcot(id | -), composition with f, and downcast
  std::string g1 = b.add("dcot-weak", {T(idy), T(k1)});
  std::string g2 = b.add("dcot-beta", {T(idy), T(k1)});
  std::string g3 = b.add("trans-strong", {}, {g2, f4});
  std::string g4 = b.add("dcot-unique", {}, {g1, g3});
  std::string g5 = b.add("strong-subst", {T(fe)}, {g4});
  TermPtr hh = comp(Term::dcotuple(idy, k1), fe);
  TermPtr hhp = comp(Term::dcotuple(idy, k1p), fe);
  std::string g6 = b.add("down-weak", {T(hh)});
  std::string g7 = b.add("strong-to-weak", {}, {g5});
  std::string g8 = b.add("down-weak", {T(hhp)});
  std::string g9 = b.add("sym-weak", {}, {g8});
  std::string g10 = b.add("trans-weak", {}, {g6, g7});
  std::string g11 = b.add("trans-weak", {}, {g10, g9});
  std::string g12 = b.add("ppg-weak-to-strong", {}, {g11});

  b.finish(Equation{lhs.whole, rhs.whole, Strength::Strong}, g12);
  return b.take();
}

ProofScript prove_downcast_unique(const Signature& sig, const TermPtr& g,
                                  const TermPtr& k0) {
  require_ppg(sig, g, "downcast-unique subject");
  ScriptBuilder b("downcast-unique");
  TermPtr ge = elaborate(sig, g);
  TermPtr k0e = elaborate(sig, k0);
  TermPtr cot = Term::dcotuple(ge, k0e);
  std::string s1 = b.add("dcot-weak", {T(ge), T(k0e)});
  std::string s2 = b.add("sym-weak", {}, {s1});
  std::string s3 = b.add("down-weak", {T(cot)});
  std::string s4 = b.add("sym-weak", {}, {s3});
  std::string s5 = b.add("trans-weak", {}, {s2, s4});
  std::string s6 = b.add("ppg-weak-to-strong", {}, {s5});
  b.finish(Equation{ge, Term::downcast(cot), Strength::Strong}, s6);
  return b.take();
}

std::vector<ProofScript> shipped_scripts(const Signature& sig) {
  std::vector<ProofScript> out;
  if (sig.exceptions.empty()) return out;
  const std::string& e0 = sig.exceptions[0].name;
  Ty y = sig.exceptions[0].param;  // carrier of the first exception

  out.push_back(prove_cotuple_collapse(sig, Term::throw_(e0, y)));
  out.push_back(prove_annihilation_untag_tag(sig, e0));
  if (sig.exceptions.size() >= 2) {
    const std::string& e1 = sig.exceptions[1].name;
    out.push_back(
        prove_annihilation_catch_raise(sig, Term::throw_(e1, y), e0));
    out.push_back(prove_commutation_untag_untag(sig, e0, e1));
    out.push_back(prove_aux_cotuple_sum(sig, Term::id(Ty::param(e0)), e0,
                                        Term::throw_(e1, y), e1));
    out.push_back(prove_commutation_catch_catch(
        sig, Term::throw_(e0, y), e0, Term::id(Ty::param(e0)), e1,
        Term::throw_(e1, y)));
  } else {
    out.push_back(
        prove_annihilation_catch_raise(sig, Term::throw_(e0, y), e0));
  }
  Arms family;
  for (const auto& exc : sig.exceptions)
    family.emplace_back(exc.name, Term::throw_(exc.name, y));
  out.push_back(prove_downcast_unique(sig, Term::throw_(e0, y),
                                      Term::ccotuple(family)));
  return out;
}

}  // namespace dex
