#include "dex/eval.hpp"

#include <functional>

#include "dex/error.hpp"

namespace dex {

const LiftedValue& FnTable::apply(const LiftedValue& x) const {
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i] == x) return outputs[i];
  throw ModelError("input outside table domain: " + to_string(x));
}

std::string to_string(const Verdict& v) {
  if (v.holds) return "holds";
  std::string kind = v.checked == Strength::Strong ? "strong-fail" : "weak-fail";
  return kind + " at " + to_string(*v.witness);
}

Evaluator::Evaluator(Signature sig, Model m)
    : sig_(std::move(sig)), model_(std::move(m)), exc_(exc_values(sig_, model_)) {}

const FnTable& Evaluator::eval(const TermPtr& t) {
  TermPtr core = elaborate(sig_, t);
  eval_core(core);
  return memo_.at(core.get());
}

namespace {

// untagging: recover the payload on a matching index, re-emit otherwise
LiftedValue untag_value(const std::string& index, const ExcValue& e) {
  if (e.index == index) return LiftedValue::ordinary(e.payload);
  return LiftedValue::exceptional(e);
}

bool decode_sum(const std::string& v, bool* left, std::string* inner) {
  if (v.size() >= 5 && v.compare(0, 4, "inl(") == 0 && v.back() == ')') {
    *left = true;
    *inner = v.substr(4, v.size() - 5);
    return true;
  }
  if (v.size() >= 5 && v.compare(0, 4, "inr(") == 0 && v.back() == ')') {
    *left = false;
    *inner = v.substr(4, v.size() - 5);
    return true;
  }
  return false;
}

}  // namespace

FnTable Evaluator::eval_core(const TermPtr& t) {
  if (auto it = memo_.find(t.get()); it != memo_.end()) return it->second;
  retained_.push_back(t);  // memo keys by node address; keep the node alive

  using K = Term::Kind;
  Typing typing = typecheck(sig_, *t);
  FnTable table;
  table.dom = resolve(sig_, typing.dom);
  table.cod = resolve(sig_, typing.cod);
  for (const auto& v : carrier(sig_, model_, table.dom))
    table.inputs.push_back(LiftedValue::ordinary(v));
  for (const auto& e : exc_) table.inputs.push_back(LiftedValue::exceptional(e));

  auto propagate_ordinary =
      [&](const std::function<LiftedValue(const std::string&)>& on_ord) {
        for (const auto& x : table.inputs)
          table.outputs.push_back(x.is_ord() ? on_ord(x.ord) : x);
      };

  switch (t->kind) {
    case K::Id:
      table.outputs = table.inputs;
      break;
    case K::Op:
      propagate_ordinary([&](const std::string& v) {
        auto out = model_.apply_op(t->symbol, v);
        if (!out) throw ModelError("partial table for op " + t->symbol);
        return LiftedValue::ordinary(*out);
      });
      break;
    case K::EmptyMap:
      // dom 0: only exceptional inputs, all propagated
      table.outputs = table.inputs;
      break;
    case K::Inl:
      propagate_ordinary([&](const std::string& v) {
        return LiftedValue::ordinary("inl(" + v + ")");
      });
      break;
    case K::Inr:
      propagate_ordinary([&](const std::string& v) {
        return LiftedValue::ordinary("inr(" + v + ")");
      });
      break;
    case K::Tag:
      propagate_ordinary([&](const std::string& v) {
        return LiftedValue::exceptional(ExcValue{t->symbol, v});
      });
      break;
    case K::Untag:
      for (const auto& x : table.inputs)
        table.outputs.push_back(untag_value(t->symbol, x.exc));
      break;
    case K::Compose: {
      const FnTable inner = eval_core(t->child_b);
      const FnTable outer = eval_core(t->child_a);
      for (const auto& x : table.inputs)
        table.outputs.push_back(outer.apply(inner.apply(x)));
      break;
    }
    case K::Downcast: {
      const FnTable inner = eval_core(t->child_a);
      for (const auto& x : table.inputs)
        table.outputs.push_back(x.is_ord() ? inner.apply(x) : x);
      break;
    }
    case K::CCotuple: {
      std::vector<FnTable> components;
      for (const auto& [index, component] : t->arms)
        components.push_back(eval_core(component));
      for (const auto& x : table.inputs) {
        std::size_t which = *sig_.exception_index(x.exc.index);
        table.outputs.push_back(
            components[which].apply(LiftedValue::ordinary(x.exc.payload)));
      }
      break;
    }
    case K::DCotuple: {
      const FnTable ordinary_slot = eval_core(t->child_a);
      const FnTable exceptional_slot = eval_core(t->child_b);
      for (const auto& x : table.inputs)
        table.outputs.push_back(x.is_ord() ? ordinary_slot.apply(x)
                                           : exceptional_slot.apply(x));
      break;
    }
    case K::SCotuple: {
      const FnTable left = eval_core(t->child_a);
      const FnTable right = eval_core(t->child_b);
      for (const auto& x : table.inputs) {
        if (!x.is_ord()) {
          table.outputs.push_back(right.apply(x));
          continue;
        }
        bool is_left = false;
        std::string inner;
        if (!decode_sum(x.ord, &is_left, &inner))
          throw ModelError("malformed sum value: " + x.ord);
        table.outputs.push_back(
            (is_left ? left : right).apply(LiftedValue::ordinary(inner)));
      }
      break;
    }
    case K::Throw:
    case K::Try:
      throw ModelError("sugar reached the core evaluator");
  }

  memo_.emplace(t.get(), table);
  return table;
}

LiftedValue Evaluator::eval_try_operational(
    const FnTable& f,
    const std::vector<std::pair<std::string, const FnTable*>>& handlers,
    const LiftedValue& x, ScanOrder order) const {
  if (!x.is_ord()) return x;  // the try-catch is a propagator
  LiftedValue y = f.apply(x);
  if (y.is_ord()) return y;  // (1) ordinary result
  auto run = [&](const std::pair<std::string, const FnTable*>& h)
      -> std::optional<LiftedValue> {
    LiftedValue z = untag_value(h.first, y.exc);
    if (z.is_ord()) return h.second->apply(z);  // (2a) caught
    return std::nullopt;
  };
  if (order == ScanOrder::FirstMatch) {
    for (const auto& h : handlers)
      if (auto r = run(h)) return *r;
  } else {
    for (auto it = handlers.rbegin(); it != handlers.rend(); ++it)
      if (auto r = run(*it)) return *r;
  }
  return y;  // (2b) propagated
}

LiftedValue Evaluator::eval_try_compositional(
    const FnTable& f,
    const std::vector<std::pair<std::string, const FnTable*>>& handlers,
    const LiftedValue& x) const {
  if (!x.is_ord()) return x;
  LiftedValue y = f.apply(x);
  if (y.is_ord()) return y;
  // k_p = (g_p | k_{p+1}) . untag[i_p];  k_{n+1} embeds Exc back
  std::function<LiftedValue(std::size_t, const ExcValue&)> katch =
      [&](std::size_t p, const ExcValue& e) -> LiftedValue {
    if (p == handlers.size()) return LiftedValue::exceptional(e);
    LiftedValue z = untag_value(handlers[p].first, e);
    if (z.is_ord()) return handlers[p].second->apply(z);
    return katch(p + 1, z.exc);
  };
  return katch(0, y.exc);
}

Verdict Evaluator::check_equation(const Equation& eq) {
  const FnTable lhs = eval(eq.lhs);
  const FnTable rhs = eval(eq.rhs);
  Verdict v;
  v.checked = eq.strength;
  for (std::size_t i = 0; i < lhs.inputs.size(); ++i) {
    if (eq.strength == Strength::Weak && !lhs.inputs[i].is_ord()) continue;
    if (lhs.outputs[i] != rhs.apply(lhs.inputs[i])) {
      v.holds = false;
      v.witness = lhs.inputs[i];
      return v;
    }
  }
  return v;
}

bool Evaluator::propagates(const TermPtr& t) {
  const FnTable table = eval(t);
  for (std::size_t i = 0; i < table.inputs.size(); ++i)
    if (!table.inputs[i].is_ord() && table.outputs[i] != table.inputs[i])
      return false;
  return true;
}

}  // namespace dex
