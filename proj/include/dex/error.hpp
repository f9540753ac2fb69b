#pragma once

#include <stdexcept>
#include <string>

namespace dex {

// Base class for all diagnostics raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in a .dex / .prf / model file.
struct ParseError : Error {
  ParseError(std::string msg, int line, int col)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Ill-typed term: unknown symbol, composition mismatch, bad cotuple.
struct TypeError : Error {
  using Error::Error;
};

// A constructor received an argument whose inferred decoration is too strong.
struct DecorationError : Error {
  using Error::Error;
};

// Invalid model: missing carrier, partial table, violated pure axiom.
struct ModelError : Error {
  using Error::Error;
};

// Rule application rejected by the proof kernel.
struct KernelError : Error {
  using Error::Error;
};

}  // namespace dex
