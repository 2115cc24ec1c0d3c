#pragma once

#include <stdexcept>
#include <string>

namespace ltlfsyn {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in a formula, partition, trace or
// strategy file.  Carries a 1-based line/column position.
struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Ill-formed input that is not a syntax error (bad partition,
// undeclared proposition, mismatched strategy, ...).
struct InputError : Error {
  using Error::Error;
};

// The explicit state budget of a construction or search was exhausted.
struct BudgetExceededError : Error {
  using Error::Error;
};

// Cooperative wall-clock timeout (bench mode).
struct TimeoutError : Error {
  using Error::Error;
};

// Semantic misuse of an API (unknown state key, lookup outside a
// strategy domain, evaluation of an empty trace, ...).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace ltlfsyn
