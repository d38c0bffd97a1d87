#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordgram/grammar.hpp"
#include "ordgram/limits.hpp"
#include "ordgram/ordinal.hpp"

namespace ordgram {

// One piece of desk-scale evidence against the ordinal-grammar hypothesis.
// Kinds: "prefix-violation", "descending-chain", "u-bound-violation",
// "left-recursion", "shape-violation", "not-ordinal-grammar".
struct Finding {
  std::string kind;
  std::string detail;
};

struct ValidateReport {
  std::vector<Finding> findings;
  std::optional<std::size_t> finite_count;  // exact word count when the language is finite

  bool clean() const { return findings.empty(); }
};

// Bounded validation: prefix-freeness of every nonterminal's language among
// words of length <= max_len, descending-chain witnesses in the start
// symbol's enumeration, pump-word domination for recursive nonterminals, and
// the exact count for finite languages.  A clean report is evidence, not
// proof.  Throws BudgetExceededError past the enumeration budget.
ValidateReport validate(const Grammar& g, std::size_t max_len, const Limits& limits = {});

// True iff `rank` is strictly increasing along the enumeration of L(G) up to
// max_len and every rank stays below `claimed`.
bool rank_check(const Grammar& g, const Ordinal& claimed,
                const std::function<Ordinal(const std::string&)>& rank, std::size_t max_len,
                const Limits& limits = {});

}  // namespace ordgram
