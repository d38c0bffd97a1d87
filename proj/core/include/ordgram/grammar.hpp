#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordgram/limits.hpp"
#include "ordgram/words.hpp"

namespace ordgram {

// A terminal letter or a nonterminal.  Terminals store the character code,
// nonterminals an index into the grammar's nonterminal list.
struct Symbol {
  bool terminal = false;
  int id = 0;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// A sentential form: a finite sequence of symbols (possibly empty).
using SForm = std::vector<Symbol>;
// A set of sentential forms, ordered for determinism.
using FormSet = std::set<SForm>;

// A context-free grammar over an ordered alphabet.  Values are immutable
// after construction; all decision procedures below are pure.
struct Grammar {
  Alphabet alphabet;
  std::vector<std::string> nonterminal_names;
  std::vector<std::vector<SForm>> productions;  // indexed by nonterminal
  int start = 0;

  std::size_t nonterminal_count() const { return nonterminal_names.size(); }
  Symbol terminal_symbol(char c) const;                   // validates membership
  Symbol nonterminal_symbol(std::string_view name) const; // validates existence
  const std::string& name_of(int nt) const { return nonterminal_names[static_cast<std::size_t>(nt)]; }
};

// Grammar file format: `#` starts a comment to end of line; one
// `order: l1 < l2 < ... < lk` header (smallest letter first, single lowercase
// letters) that must precede all productions; one `start: NT` header;
// production lines `NT -> body | body` with whitespace-separated symbols,
// `_eps` (alone) for the empty body.  Lines for the same nonterminal
// accumulate; duplicate alternatives are dropped.  Terminals are single
// lowercase letters and must be declared in the order header; identifiers
// beginning with an uppercase letter are nonterminals.
Grammar parse_grammar(std::string_view text);
Grammar parse_grammar_file(const std::string& path);

std::string render_form(const Grammar& g, const SForm& form);
std::string render_grammar(const Grammar& g);
// Parses a single body using g's symbol tables ("a X b", "_eps").
SForm parse_form(const Grammar& g, std::string_view text);

// Per-nonterminal flags, each computed by the usual least fixpoint.
std::vector<bool> productive_nonterminals(const Grammar& g);
std::vector<bool> nullable_nonterminals(const Grammar& g);
std::vector<bool> reachable_nonterminals(const Grammar& g);
// True for nonterminals deriving at least one word of length >= 1.
std::vector<bool> derives_nonempty_word(const Grammar& g);

// True iff no form in the set derives a terminal word.
bool is_empty(const Grammar& g, const FormSet& forms);

// Exact finiteness of L(X) for a productive X: infinite iff some cycle of
// productive occurrences through X pumps extra letters.
bool is_finite(const Grammar& g, int nt);

// All of L(X) for a finite language; throws DomainError when L(X) is
// infinite and BudgetExceededError past limits.enumeration_budget.
std::vector<std::string> finite_words(const Grammar& g, int nt, const Limits& limits = {});

// Every word of length <= max_len derivable from any of the forms, sorted by
// the alphabet's lexicographic order, duplicates removed.
std::vector<std::string> lex_enumerate(const Grammar& g, const FormSet& forms,
                                       std::size_t max_len, const Limits& limits = {});

// Drops unproductive and unreachable nonterminals (and every alternative
// mentioning them).  The start symbol is always kept, possibly with no
// productions left.
Grammar strip_useless(const Grammar& g);

// Renumbers a grammar onto the kept nonterminals. `prods` is indexed by old
// nonterminal id and must only mention kept nonterminals; the start symbol
// must be kept.
Grammar rebuild_grammar(const Grammar& g, const std::vector<bool>& keep,
                        const std::vector<std::vector<SForm>>& prods);

}  // namespace ordgram
