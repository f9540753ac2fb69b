#include "dex/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include <json.hpp>

#include "dex/error.hpp"
#include "dex/eval.hpp"
#include "dex/rng.hpp"

namespace dex {

LiftedValue LiftedValue::ordinary(std::string v) {
  return LiftedValue{Kind::Ord, std::move(v), {}};
}

LiftedValue LiftedValue::exceptional(ExcValue e) {
  return LiftedValue{Kind::Exc, {}, std::move(e)};
}

std::string to_string(const LiftedValue& v) {
  if (v.is_ord()) return "ord(" + v.ord + ")";
  return "exc[" + v.exc.index + "](" + v.exc.payload + ")";
}

const std::vector<std::string>* Model::find_carrier(
    const std::string& base) const {
  for (const auto& [name, tokens] : carriers)
    if (name == base) return &tokens;
  return nullptr;
}

std::optional<std::string> Model::apply_op(const std::string& op,
                                           const std::string& input) const {
  for (const auto& [name, table] : ops)
    if (name == op) {
      for (const auto& [in, out] : table)
        if (in == input) return out;
      return std::nullopt;
    }
  return std::nullopt;
}

std::vector<std::string> carrier(const Signature& sig, const Model& m,
                                 const Ty& ty) {
  Ty r = resolve(sig, ty);
  switch (r.kind()) {
    case Ty::Kind::Empty:
      return {};
    case Ty::Kind::Base: {
      const auto* c = m.find_carrier(r.name());
      if (!c) throw ModelError("missing carrier for base type " + r.name());
      return *c;
    }
    case Ty::Kind::Sum: {
      std::vector<std::string> out;
      for (const auto& v : carrier(sig, m, r.left())) out.push_back("inl(" + v + ")");
      for (const auto& v : carrier(sig, m, r.right())) out.push_back("inr(" + v + ")");
      return out;
    }
    case Ty::Kind::Param:
      break;  // impossible after resolve
  }
  throw ModelError("unresolvable type");
}

std::vector<ExcValue> exc_values(const Signature& sig, const Model& m) {
  std::vector<ExcValue> out;
  for (const auto& exc : sig.exceptions)
    for (const auto& payload : carrier(sig, m, exc.param))
      out.push_back(ExcValue{exc.name, payload});
  return out;
}

Model build_model(const Signature& sig, Model m) {
  for (const auto& base : sig.base_types)
    if (!m.find_carrier(base))
      throw ModelError("missing carrier for base type " + base);
  for (const auto& [name, tokens] : m.carriers) {
    if (!sig.has_base(name))
      throw ModelError("carrier for undeclared type " + name);
    for (const auto& tok : tokens)
      if (std::count(tokens.begin(), tokens.end(), tok) != 1)
        throw ModelError("duplicate token '" + tok + "' in carrier " + name);
  }
  for (const auto& op : sig.ops) {
    const auto* dom = m.find_carrier(op.dom.name());
    const auto* cod = m.find_carrier(op.cod.name());
    for (const auto& v : *dom) {
      auto out = m.apply_op(op.name, v);
      if (!out)
        throw ModelError("partial table for op " + op.name + ": no entry for '" +
                         v + "'");
      if (std::find(cod->begin(), cod->end(), *out) == cod->end())
        throw ModelError("op " + op.name + " maps '" + v +
                         "' outside its codomain carrier");
    }
  }
  for (const auto& [name, table] : m.ops) {
    if (!sig.find_op(name)) throw ModelError("table for undeclared op " + name);
    const auto* dom = m.find_carrier(sig.find_op(name)->dom.name());
    for (const auto& [in, out] : table) {
      (void)out;
      if (std::find(dom->begin(), dom->end(), in) == dom->end())
        throw ModelError("op " + name + " table keyed by unknown token '" + in +
                         "'");
    }
  }
  // pure axioms must hold pointwise
  Evaluator ev(sig, m);
  for (const auto& ax : sig.axioms) {
    Verdict v = ev.check_equation(ax.eq);
    if (!v.holds)
      throw ModelError("pure axiom " + ax.name + " violated at " +
                       to_string(*v.witness));
  }
  return m;
}

// --- JSON ------------------------------------------------------------------

using json = nlohmann::ordered_json;

Model read_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  if (!j.is_object() || !j.contains("carriers") || !j.contains("ops"))
    throw ParseError("model file must have \"carriers\" and \"ops\"", 1, 1);
  Model m;
  for (const auto& [name, tokens] : j.at("carriers").items()) {
    std::vector<std::string> c;
    for (const auto& t : tokens) c.push_back(t.get<std::string>());
    m.carriers.emplace_back(name, std::move(c));
  }
  for (const auto& [name, table] : j.at("ops").items()) {
    std::vector<std::pair<std::string, std::string>> t;
    for (const auto& [in, out] : table.items())
      t.emplace_back(in, out.get<std::string>());
    m.ops.emplace_back(name, std::move(t));
  }
  return m;
}

std::string write_model(const Model& m) {
  json j;
  j["carriers"] = json::object();
  for (const auto& [name, tokens] : m.carriers) j["carriers"][name] = tokens;
  j["ops"] = json::object();
  for (const auto& [name, table] : m.ops) {
    json t = json::object();
    for (const auto& [in, out] : table) t[in] = out;
    j["ops"][name] = t;
  }
  return j.dump(2) + "\n";
}

// --- seeded stream ----------------------------------------------------------

namespace {

std::string token_name(const std::string& base, int i) {
  std::string lower;
  for (char c : base) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lower + std::to_string(i);
}

std::string model_id(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "m%03d", n);
  return buf;
}

}  // namespace

ModelStream::ModelStream(const Signature& sig, int max_carrier,
                         std::uint64_t seed)
    : sig_(sig), max_carrier_(max_carrier), state_(seed) {}

std::optional<Model> ModelStream::next() {
  if (exhausted_) return std::nullopt;
  Rng rng(state_);
  if (emitted_ == 0) {
    // the degenerate all-empty model, always first
    Model m;
    m.id = model_id(0);
    for (const auto& base : sig_.base_types) m.carriers.emplace_back(base, std::vector<std::string>{});
    for (const auto& op : sig_.ops)
      m.ops.emplace_back(op.name, std::vector<std::pair<std::string, std::string>>{});
    ++emitted_;
    if (max_carrier_ == 0) exhausted_ = true;
    return m;
  }
  const int kMaxAttempts = 2000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Model m;
    for (const auto& base : sig_.base_types) {
      int size = rng.range(0, max_carrier_);
      std::vector<std::string> tokens;
      for (int i = 0; i < size; ++i) tokens.push_back(token_name(base, i));
      m.carriers.emplace_back(base, std::move(tokens));
    }
    bool sized_ok = true;
    for (const auto& op : sig_.ops) {
      const auto& dom = *m.find_carrier(op.dom.name());
      const auto& cod = *m.find_carrier(op.cod.name());
      if (!dom.empty() && cod.empty()) {
        sized_ok = false;  // no total table exists
        break;
      }
      std::vector<std::pair<std::string, std::string>> table;
      for (const auto& v : dom)
        table.emplace_back(v, cod[rng.below(cod.size())]);
      m.ops.emplace_back(op.name, std::move(table));
    }
    if (!sized_ok) continue;
    try {
      m = build_model(sig_, std::move(m));
    } catch (const ModelError&) {
      continue;  // axiom violated at this draw
    }
    m.id = model_id(emitted_);
    ++emitted_;
    state_ = rng.next();  // persist position in the stream
    return m;
  }
  exhausted_ = true;
  return std::nullopt;
}

std::vector<Model> enumerate_models(const Signature& sig, int max_carrier,
                                    std::uint64_t seed, int count) {
  ModelStream stream(sig, max_carrier, seed);
  std::vector<Model> out;
  for (int i = 0; i < count; ++i) {
    auto m = stream.next();
    if (!m) break;
    out.push_back(std::move(*m));
  }
  return out;
}

}  // namespace dex
