#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordgram {

// Base class of every diagnostic raised by the library.  The CLI maps any
// Error to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed ordinal text or grammar file.  `line` is 1-based for grammar
// files and 0 for single-line inputs; `column` is a byte offset.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
    std::string s = "parse error: " + msg;
    if (line > 0) s += " (line " + std::to_string(line) + ")";
    else if (column > 0) s += " (offset " + std::to_string(column) + ")";
    return s;
  }
  std::size_t line_;
  std::size_t column_;
};

// A coefficient left the range of 64-bit unsigned integers.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain (degree of 0, quotient by an
// empty pump word, and the like).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured budget was exhausted; usually a sign of invalid input.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// The input grammar provably cannot be an ordinal grammar.
class NotAnOrdinalGrammar : public Error {
 public:
  using Error::Error;
};

// A nonterminal derives itself in leftmost position.
class LeftRecursionError : public NotAnOrdinalGrammar {
 public:
  using NotAnOrdinalGrammar::NotAnOrdinalGrammar;
};

// A production violates the component shape required of normal forms.
class ShapeViolationError : public NotAnOrdinalGrammar {
 public:
  using NotAnOrdinalGrammar::NotAnOrdinalGrammar;
};

}  // namespace ordgram
