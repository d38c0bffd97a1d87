#pragma once

#include <string>
#include <vector>

#include "ordgram/grammar.hpp"

namespace ordgram {

// Mutual-derivability structure of a grammar.  Symbol nodes are the
// nonterminals (0..n-1) followed by the terminals in alphabet order
// (n..n+k-1).  Nonterminals that derive one another form one component;
// terminals always sit in singleton components of height 0.
struct ComponentTable {
  int component_count = 0;
  std::vector<int> component;   // per symbol node
  std::vector<bool> recursive;  // per nonterminal
  std::vector<std::string> u;   // per nonterminal: pump word, "" if not recursive
  std::vector<int> height;      // per symbol node: longest strict chain below

  int node_of(const Grammar& g, const Symbol& s) const {
    return s.terminal ? static_cast<int>(g.nonterminal_count()) + g.alphabet.rank(static_cast<char>(s.id))
                      : s.id;
  }
};

// How one production body sits relative to its owner's component.
struct ProductionParts {
  int component_occurrences = 0;  // symbols of the owner's component in the body
  bool clean_head = true;         // only terminals before the first such symbol
  std::string head_word;          // those terminals (valid when clean_head)
  int partner = -1;               // the first component nonterminal, if any
  SForm tail;                     // symbols after it (valid when occurrences == 1)
};

// Components, recursive flags and heights.  Works on any grammar.
ComponentTable compute_components(const Grammar& g);

// Pump words for every recursive nonterminal, with a consistency check: all
// cycle labels inside one component must be powers of a common primitive
// word, otherwise the grammar cannot be an ordinal grammar
// (NotAnOrdinalGrammar).  Requires normal-form shape for the recursive
// components (terminal head words before the component symbol).
void compute_all_u(const Grammar& g, ComponentTable& t);
// Convenience for one nonterminal; computes its whole component.
std::string compute_u(const Grammar& g, const ComponentTable& t, int nt);

ProductionParts classify_production(const Grammar& g, const ComponentTable& t, int owner,
                                    const SForm& body);

}  // namespace ordgram
