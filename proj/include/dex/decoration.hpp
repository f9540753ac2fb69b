#pragma once

#include <string>

#include "dex/signature.hpp"
#include "dex/term.hpp"

namespace dex {

// Effect class of an expression, totally ordered: a pure expression can be
// read as a propagator and a propagator as a catcher, never the reverse.
enum class Decoration { Pure = 0, Propagator = 1, Catcher = 2 };

inline bool operator<=(Decoration a, Decoration b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}
inline Decoration max(Decoration a, Decoration b) { return a <= b ? b : a; }

std::string to_string(Decoration d);  // "pure" / "ppg" / "ctc"

// Least decoration derivable syntactically. Sugar is inferred through its
// elaboration. Throws DecorationError when a cotuple slot that demands a
// propagator receives a catcher (ccot component, dcot/scot first slot).
Decoration infer(const Signature& sig, const TermPtr& t);

// infer(t) <= required.
bool check_at(const Signature& sig, const TermPtr& t, Decoration required);

}  // namespace dex
