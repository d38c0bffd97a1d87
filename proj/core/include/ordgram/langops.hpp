#pragma once

#include <string_view>

#include "ordgram/components.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/words.hpp"

namespace ordgram {

// Supremum of a language, together with whether the language contains it.
struct SupInfo {
  UPWord value;
  bool attained = false;
};

// Least upper bound of L(form) under the lexicographic order.  Requires a
// normal-form grammar with pump words filled in (compute_all_u); recursive
// nonterminals contribute their pump word's infinite power, nonrecursive ones
// the maximum over their alternatives.
SupInfo sup(const Grammar& g, const ComponentTable& t, const SForm& form);

// The quotient operators below take forms that begin with a terminal or are
// empty (normal-form shape) and return sets of forms of the same shape, over
// the same grammar.

// Forms with the leading nonterminal expanded by one production step;
// identity on terminal-headed and empty forms.
FormSet expand_heads(const Grammar& g, const SForm& form);

// Forms generating b^{-1} L(form).
FormSet letter_quot(const Grammar& g, const SForm& form, char b);
// Forms generating { x in L(form) : x < w } (lexicographically).
FormSet quot_less(const Grammar& g, const SForm& form, std::string_view w);
// Forms generating { x in L(form) : x >= w }.
FormSet quot_geq(const Grammar& g, const SForm& form, std::string_view w);
// Forms generating u^{-1} L(form).
FormSet left_quot(const Grammar& g, const SForm& form, std::string_view u);

FormSet letter_quot(const Grammar& g, const FormSet& forms, char b);
FormSet quot_less(const Grammar& g, const FormSet& forms, std::string_view w);
FormSet quot_geq(const Grammar& g, const FormSet& forms, std::string_view w);
FormSet left_quot(const Grammar& g, const FormSet& forms, std::string_view u);

struct EventualAvoidance {
  bool avoids = false;
  std::size_t threshold = 0;  // smallest avoiding N; meaningful when avoids
};

// Decides whether some N >= 0 has u·v^N·Σ* ∩ L(form) = ∅, and reports the
// smallest such N.  Works by taking the image of L(form) under the
// finite-state transduction that counts complete copies of v after the
// prefix u, and testing that image for finiteness.
EventualAvoidance eventual_avoidance(const Grammar& g, std::string_view u, std::string_view v,
                                     const SForm& form, const Limits& limits = {});
bool eventually_avoids(const Grammar& g, std::string_view u, std::string_view v,
                       const SForm& form, const Limits& limits = {});

}  // namespace ordgram
