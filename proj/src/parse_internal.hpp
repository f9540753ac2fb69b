#pragma once

#include "dex/signature.hpp"
#include "dex/term.hpp"
#include "lex.hpp"

namespace dex {

// Parses a term from the cursor position, stopping at the first token that
// cannot continue a compose chain (used by the .prf reader).
TermPtr parse_term_prefix(const Signature& sig, lex::Cursor& c);

}  // namespace dex
