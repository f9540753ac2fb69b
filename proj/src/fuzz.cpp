#include <algorithm>
#include <functional>
#include <sstream>

#include "dex/decoration.hpp"
#include "dex/error.hpp"
#include "dex/eval.hpp"
#include "dex/theorems.hpp"

namespace dex {

namespace {

// Resolved types a generated term may pass through: bases, 0, and one level
// of sums over them.
std::vector<Ty> type_pool(const Signature& sig) {
  std::vector<Ty> pool;
  for (const auto& b : sig.base_types) pool.push_back(Ty::base(b));
  pool.push_back(Ty::empty());
  std::vector<Ty> firsts = pool;
  for (const auto& a : firsts)
    for (const auto& b : firsts) pool.push_back(Ty::sum(a, b));
  return pool;
}

enum class Prod {
  Id, Op, EmptyMap, Tag, Untag, Throw, Inl, Inr,
  Compose, Downcast, DCot, CCot, SCot, Try,
};

}  // namespace

std::optional<TermPtr> random_term(const Signature& sig, Rng& rng, const Ty& dom,
                                   const Ty& cod, int depth,
                                   Decoration max_deco) {
  bool ppg_ok = Decoration::Propagator <= max_deco;
  bool ctc_ok = Decoration::Catcher <= max_deco;

  std::vector<std::pair<Prod, std::string>> candidates;
  auto push = [&](Prod p, std::string payload = {}, int weight = 1) {
    for (int w = 0; w < weight; ++w) candidates.emplace_back(p, payload);
  };

  if (dom == cod) push(Prod::Id);
  for (const auto& op : sig.ops)
    if (resolve(sig, op.dom) == dom && resolve(sig, op.cod) == cod)
      push(Prod::Op, op.name);
  if (dom.is_empty()) push(Prod::EmptyMap);
  for (const auto& exc : sig.exceptions) {
    Ty p = resolve(sig, exc.param);
    if (ppg_ok && p == dom && cod.is_empty()) push(Prod::Tag, exc.name);
    if (ctc_ok && dom.is_empty() && p == cod) push(Prod::Untag, exc.name);
    if (ppg_ok && p == dom) push(Prod::Throw, exc.name);
  }
  if (cod.kind() == Ty::Kind::Sum && cod.left() == dom) push(Prod::Inl);
  if (cod.kind() == Ty::Kind::Sum && cod.right() == dom) push(Prod::Inr);
  if (depth > 0) {
    push(Prod::Compose, {}, 3);
    if (ppg_ok) push(Prod::Downcast);
    if (ctc_ok) push(Prod::DCot);
    if (ctc_ok && dom.is_empty() && !sig.exceptions.empty()) push(Prod::CCot);
    if (dom.kind() == Ty::Kind::Sum) push(Prod::SCot, {}, 2);
    if (ppg_ok && !sig.exceptions.empty()) push(Prod::Try);
  }
  if (candidates.empty()) return std::nullopt;

  std::vector<Ty> pool = type_pool(sig);
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto [prod, payload] = candidates[rng.below(candidates.size())];
    switch (prod) {
      case Prod::Id:
        return Term::id(dom);
      case Prod::Op:
        return Term::op(payload);
      case Prod::EmptyMap:
        return Term::empty_map(cod);
      case Prod::Tag:
        return Term::tag(payload);
      case Prod::Untag:
        return Term::untag(payload);
      case Prod::Throw:
        return Term::throw_(payload, cod);
      case Prod::Inl:
        return Term::inl(cod.left(), cod.right());
      case Prod::Inr:
        return Term::inr(cod.left(), cod.right());
      case Prod::Compose: {
        const Ty& mid = pool[rng.below(pool.size())];
        auto inner = random_term(sig, rng, dom, mid, depth - 1, max_deco);
        if (!inner) break;
        auto outer = random_term(sig, rng, mid, cod, depth - 1, max_deco);
        if (!outer) break;
        return Term::compose(*outer, *inner);
      }
      case Prod::Downcast: {
        auto k = random_term(sig, rng, dom, cod, depth - 1, Decoration::Catcher);
        if (!k) break;
        return Term::downcast(*k);
      }
      case Prod::DCot: {
        auto g = random_term(sig, rng, dom, cod, depth - 1,
                             Decoration::Propagator);
        if (!g) break;
        auto k = random_term(sig, rng, Ty::empty(), cod, depth - 1,
                             Decoration::Catcher);
        if (!k) break;
        return Term::dcotuple(*g, *k);
      }
      case Prod::CCot: {
        Arms family;
        for (const auto& exc : sig.exceptions) {
          auto c = random_term(sig, rng, resolve(sig, exc.param), cod,
                               depth - 1, Decoration::Propagator);
          family.emplace_back(exc.name, c ? *c : Term::throw_(exc.name, cod));
        }
        return Term::ccotuple(std::move(family));
      }
      case Prod::SCot: {
        Decoration left_max =
            max_deco == Decoration::Pure ? Decoration::Pure
                                         : Decoration::Propagator;
        auto f = random_term(sig, rng, dom.left(), cod, depth - 1, left_max);
        if (!f) break;
        auto k = random_term(sig, rng, dom.right(), cod, depth - 1, max_deco);
        if (!k) break;
        return Term::scotuple(*f, *k);
      }
      case Prod::Try: {
        auto body = random_term(sig, rng, dom, cod, depth - 1,
                                Decoration::Catcher);
        if (!body) break;
        int n = rng.range(1, 3);
        Arms handlers;
        for (int h = 0; h < n; ++h) {
          const auto& exc = sig.exceptions[rng.below(sig.exceptions.size())];
          auto g = random_term(sig, rng, resolve(sig, exc.param), cod,
                               depth - 1, Decoration::Propagator);
          handlers.emplace_back(exc.name,
                                g ? *g : Term::throw_(exc.name, cod));
        }
        return Term::try_(*body, std::move(handlers));
      }
    }
  }
  return std::nullopt;
}

TermPtr random_any_term(const Signature& sig, Rng& rng, int depth) {
  std::vector<Ty> pool = type_pool(sig);
  for (;;) {
    const Ty& dom = pool[rng.below(pool.size())];
    const Ty& cod = pool[rng.below(pool.size())];
    int roll = rng.range(0, 3);
    Decoration deco = roll == 0   ? Decoration::Pure
                      : roll == 3 ? Decoration::Catcher
                                  : Decoration::Propagator;
    auto t = random_term(sig, rng, dom, cod, rng.range(0, depth), deco);
    if (t) return *t;
  }
}

Signature random_signature(Rng& rng) {
  static const char* kBases[] = {"A", "B", "C"};
  static const char* kOps[] = {"f", "g", "h"};
  Signature sig;
  int nbases = rng.range(1, 3);
  for (int b = 0; b < nbases; ++b) sig.base_types.push_back(kBases[b]);
  int nops = rng.range(0, 3);
  for (int o = 0; o < nops; ++o) {
    Ty dom = Ty::base(sig.base_types[rng.below(sig.base_types.size())]);
    Ty cod = Ty::base(sig.base_types[rng.below(sig.base_types.size())]);
    sig.ops.push_back(OpDecl{kOps[o], std::move(dom), std::move(cod)});
  }
  int nexcs = rng.range(1, 3);
  for (int e = 0; e < nexcs; ++e) {
    Ty param = Ty::base(sig.base_types[rng.below(sig.base_types.size())]);
    sig.exceptions.push_back(
        ExcDecl{"E" + std::to_string(e + 1), std::move(param)});
  }
  return sig;
}

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  out << "dex fuzz report\n";
  for (const auto& line : lines) out << line << "\n";
  out << "counts models=" << models << " agreement=" << agreement_cases
      << " propagation=" << propagation_checks << " purity=" << purity_checks
      << " collapse=" << collapse_checks << " judgments=" << judgment_checks
      << "\n";
  out << "violations " << violations.size() << "\n";
  return out.str();
}

FuzzReport fuzz_soundness(const Signature& sig, const FuzzOptions& opt) {
  if (opt.models < 1 || opt.terms < 1)
    throw Error("fuzz requires at least one model and one term");
  FuzzReport rep;
  std::vector<Model> models =
      enumerate_models(sig, opt.max_carrier, opt.seed, opt.models);
  rep.models = static_cast<int>(models.size());
  Rng rng(opt.seed ^ 0xd1b54a32d192ed03ull);

  // try-catch configurations, shared across models
  struct TryCase {
    TermPtr body;
    Arms handlers;
  };
  std::vector<TryCase> tries;
  std::vector<Ty> pool = type_pool(sig);
  if (!sig.exceptions.empty()) {
    int wanted = opt.terms;
    for (int n = 0; n < wanted * 4 && static_cast<int>(tries.size()) < wanted;
         ++n) {
      const Ty& dom = pool[rng.below(pool.size())];
      const Ty& cod = pool[rng.below(pool.size())];
      auto body = random_term(sig, rng, dom, cod, opt.max_depth - 1,
                              Decoration::Catcher);
      if (!body) continue;
      int count = rng.range(1, opt.max_handlers);
      Arms handlers;
      for (int h = 0; h < count; ++h) {
        const auto& exc = sig.exceptions[rng.below(sig.exceptions.size())];
        auto g = random_term(sig, rng, resolve(sig, exc.param), cod, 2,
                             Decoration::Propagator);
        handlers.emplace_back(exc.name, g ? *g : Term::throw_(exc.name, cod));
      }
      tries.push_back(TryCase{*body, std::move(handlers)});
    }
  }

  // plain terms for the propagation / purity invariants
  std::vector<TermPtr> plain;
  for (int n = 0; n < opt.terms; ++n)
    plain.push_back(random_any_term(sig, rng, opt.max_depth));

  // weakly-equal propagator pairs, (t, down(t)) guarantees non-vacuity
  std::vector<std::pair<TermPtr, TermPtr>> pairs;
  for (int n = 0; n < std::max(1, opt.terms / 4); ++n) {
    const Ty& dom = pool[rng.below(pool.size())];
    const Ty& cod = pool[rng.below(pool.size())];
    auto f = random_term(sig, rng, dom, cod, opt.max_depth - 2,
                         Decoration::Propagator);
    if (!f) continue;
    pairs.emplace_back(*f, Term::downcast(*f));
    auto g = random_term(sig, rng, dom, cod, opt.max_depth - 2,
                         Decoration::Propagator);
    if (g) pairs.emplace_back(*f, *g);
  }

  auto fail = [&rep](const std::string& line) {
    rep.lines.push_back(line);
    rep.violations.push_back(line);
  };

  // judgments minted while replaying the shipped scripts
  std::vector<ProofScript> scripts = shipped_scripts(sig);
  std::vector<Equation> judgments;
  for (const auto& script : scripts) {
    ProofVerdict v = check_proof(sig, script, [&](const Judgment& j) {
      judgments.push_back(j.equation());
    });
    if (v.ok)
      rep.lines.push_back("PASS script " + script.title + " @ kernel");
    else
      fail("FAIL script " + script.title + " @ kernel [" + to_string(v) +
           "]");
  }

  for (const auto& m : models) {
    Evaluator ev(sig, m);

    for (const auto& script : scripts) {
      Equation goal{script.goal.lhs, script.goal.rhs, script.goal.strength};
      Verdict v = ev.check_equation(goal);
      if (v.holds)
        rep.lines.push_back("PASS goal " + script.title + " @ " + m.id);
      else
        fail("FAIL goal " + script.title + " @ " + m.id + " [" + to_string(v) +
             "]");
    }

    int jid = 0;
    for (const auto& eq : judgments) {
      ++jid;
      Verdict v = ev.check_equation(eq);
      ++rep.judgment_checks;
      if (!v.holds)
        fail("FAIL judgment " + std::to_string(jid) + " (" + to_string(eq) +
             ") @ " + m.id + " [" + to_string(v) + "]");
    }

    int cid = 0;
    for (const auto& tc : tries) {
      ++cid;
      const FnTable& body = ev.eval(tc.body);
      std::vector<std::pair<std::string, const FnTable*>> handlers;
      for (const auto& [index, g] : tc.handlers)
        handlers.emplace_back(index, &ev.eval(g));
      const FnTable& sugar = ev.eval(Term::try_(tc.body, tc.handlers));
      for (std::size_t x = 0; x < sugar.inputs.size(); ++x) {
        const LiftedValue& input = sugar.inputs[x];
        LiftedValue op =
            ev.eval_try_operational(body, handlers, input, opt.scan_order);
        LiftedValue co = ev.eval_try_compositional(body, handlers, input);
        const LiftedValue& el = sugar.outputs[x];
        ++rep.agreement_cases;
        if (op != co || co != el)
          fail("FAIL agreement case " + std::to_string(cid) + " @ " + m.id +
               " [" + to_string(input) + "] operational=" + to_string(op) +
               " compositional=" + to_string(co) + " elaborated=" +
               to_string(el));
      }
    }

    int tid = 0;
    for (const auto& t : plain) {
      ++tid;
      Decoration d = infer(sig, t);
      if (d <= Decoration::Propagator) {
        ++rep.propagation_checks;
        if (!ev.propagates(t))
          fail("FAIL propagation term " + std::to_string(tid) + " @ " + m.id +
               " [" + to_string(t) + "]");
      }
      if (d == Decoration::Pure) {
        ++rep.purity_checks;
        const FnTable& table = ev.eval(t);
        for (std::size_t x = 0; x < table.inputs.size(); ++x)
          if (table.inputs[x].is_ord() && !table.outputs[x].is_ord())
            fail("FAIL purity term " + std::to_string(tid) + " @ " + m.id +
                 " [" + to_string(table.inputs[x]) + "]");
      }
    }

    int pid = 0;
    for (const auto& [fa, fb] : pairs) {
      ++pid;
      Equation weak_eq{fa, fb, Strength::Weak};
      if (!ev.check_equation(weak_eq).holds) continue;
      ++rep.collapse_checks;
      Equation strong_eq{fa, fb, Strength::Strong};
      Verdict v = ev.check_equation(strong_eq);
      if (!v.holds)
        fail("FAIL weak-to-strong pair " + std::to_string(pid) + " @ " +
             m.id + " [" + to_string(v) + "]");
    }
  }
  return rep;
}

}  // namespace dex
