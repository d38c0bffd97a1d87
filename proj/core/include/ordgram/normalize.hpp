#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordgram/grammar.hpp"

namespace ordgram {

// Result of normalization: either the language turned out finite (words
// carries all of it, lex-sorted, so the order type is words.size()), or a
// normal-form grammar: every body begins with a terminal, every nonterminal
// is productive, reachable and has an infinite language, and every
// nonterminal except possibly the start symbol is recursive.
struct NormalizeOutcome {
  enum class Kind { finite, normalized };
  Kind kind = Kind::finite;
  std::vector<std::string> words;
  std::optional<Grammar> grammar;

  bool finite_language() const { return kind == Kind::finite; }
};

// Normalizes a parsed grammar, preserving its language exactly.  Throws
// LeftRecursionError when a nonterminal derives itself in leftmost position,
// ShapeViolationError when the normal form violates the component shape, and
// NotAnOrdinalGrammar when an infinite-language nonterminal derives the empty
// word; all three mean the input is not an ordinal grammar.
NormalizeOutcome to_normal_form(const Grammar& g, const Limits& limits = {});

// Shape report for a normal-form grammar: every production must begin with a
// terminal and be escaping or contain exactly one symbol of its owner's
// component, preceded only by terminals.  Returns one message per violation.
std::vector<std::string> check_shape(const Grammar& g);

}  // namespace ordgram
