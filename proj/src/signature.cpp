#include "dex/signature.hpp"

#include <algorithm>

namespace dex {

bool Signature::has_base(const std::string& name) const {
  return std::find(base_types.begin(), base_types.end(), name) !=
         base_types.end();
}

const OpDecl* Signature::find_op(const std::string& name) const {
  for (const auto& op : ops)
    if (op.name == name) return &op;
  return nullptr;
}

const ExcDecl* Signature::find_exception(const std::string& name) const {
  for (const auto& exc : exceptions)
    if (exc.name == name) return &exc;
  return nullptr;
}

const NamedEquation* Signature::find_axiom(const std::string& name) const {
  for (const auto& ax : axioms)
    if (ax.name == name) return &ax;
  return nullptr;
}

const NamedEquation* Signature::find_equation(const std::string& name) const {
  for (const auto& eq : equations)
    if (eq.name == name) return &eq;
  return nullptr;
}

const NamedTerm* Signature::find_term(const std::string& name) const {
  for (const auto& nt : terms)
    if (nt.name == name) return &nt;
  return nullptr;
}

std::optional<std::size_t> Signature::exception_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < exceptions.size(); ++i)
    if (exceptions[i].name == name) return i;
  return std::nullopt;
}

}  // namespace dex
