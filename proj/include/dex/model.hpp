#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dex/signature.hpp"
#include "dex/ty.hpp"

namespace dex {

// One element of Exc: which exception it is, and the parameter it carries.
struct ExcValue {
  std::string index;
  std::string payload;
  friend auto operator<=>(const ExcValue&, const ExcValue&) = default;
};

// Element of X+Exc. Ordinary values are encoded as strings; a value of a sum
// carrier is "inl(v)" or "inr(v)".
struct LiftedValue {
  enum class Kind { Ord, Exc };
  Kind kind;
  std::string ord;  // Kind::Ord
  ExcValue exc;     // Kind::Exc

  static LiftedValue ordinary(std::string v);
  static LiftedValue exceptional(ExcValue e);
  bool is_ord() const { return kind == Kind::Ord; }

  friend auto operator<=>(const LiftedValue&, const LiftedValue&) = default;
};

std::string to_string(const LiftedValue& v);  // ord(b0) / exc[E1](b0)

// Finite carriers for the base types plus a total function table per pure
// op. Carrier order is significant: it fixes the enumeration of Exc.
struct Model {
  std::string id = "model";
  std::vector<std::pair<std::string, std::vector<std::string>>> carriers;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
      ops;

  const std::vector<std::string>* find_carrier(const std::string& base) const;
  std::optional<std::string> apply_op(const std::string& op,
                                      const std::string& input) const;
};

// Validates carriers and tables against sig and checks every pure axiom
// pointwise. Throws ModelError with a witness on violation.
Model build_model(const Signature& sig, Model m);

// Ordinary values of a type under m, in canonical order (base carrier order;
// sums enumerate left values then right values).
std::vector<std::string> carrier(const Signature& sig, const Model& m,
                                 const Ty& ty);

// The exception alphabet: declaration order of exceptions, then carrier
// order of payloads.
std::vector<ExcValue> exc_values(const Signature& sig, const Model& m);

// Canonical JSON: {"carriers": {type: [tokens]}, "ops": {name: {in: out}}}.
// write_model(read_model(text)) == text for files in canonical form.
Model read_model(const std::string& text);
std::string write_model(const Model& m);

// Deterministic seeded stream of valid models with carrier sizes
// <= max_carrier. The first model yielded is the all-empty one. Random op
// tables are redrawn until the pure axioms hold; after too many consecutive
// failures the stream ends with exhausted() set.
class ModelStream {
 public:
  ModelStream(const Signature& sig, int max_carrier, std::uint64_t seed);
  std::optional<Model> next();
  bool exhausted() const { return exhausted_; }

 private:
  const Signature& sig_;
  int max_carrier_;
  std::uint64_t state_;
  int emitted_ = 0;
  bool exhausted_ = false;
};

// First `count` models of the stream (fewer if it exhausts).
std::vector<Model> enumerate_models(const Signature& sig, int max_carrier,
                                    std::uint64_t seed, int count);

}  // namespace dex
