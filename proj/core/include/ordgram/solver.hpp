#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ordgram/components.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/limits.hpp"
#include "ordgram/normalize.hpp"
#include "ordgram/ordinal.hpp"

namespace ordgram {

// Solution of one recursive component.  `value` follows the case analysis on
// o_beta < (o_alpha)^w; `proof_route_value` keys the first case on
// delta < gamma*w instead.  The two agree on every grammar we can construct;
// tests assert it, production code reports `value`.
struct ComponentSolution {
  Ordinal o_alpha;  // largest order type of a component-production tail
  Ordinal o_beta;   // largest order type of an escaping body
  Ordinal gamma;    // degree(o_alpha)
  Ordinal delta;    // degree(o_beta)
  int case_used = 0;
  Ordinal value;
  Ordinal proof_route_value;
};

// Order types solved so far.  Terminals always count as 1.
struct OrderTypeTable {
  std::vector<std::optional<Ordinal>> order;   // per nonterminal
  std::map<int, ComponentSolution> solutions;  // per recursive component id

  Ordinal order_of(const Symbol& s) const;
};

// Reversed product o(X_n) * ... * o(X_1); the empty form gives 1.  Every
// nonterminal of the form must be solved.
Ordinal order_type_of_form(const OrderTypeTable& t, const SForm& form);

// Order type of one recursive component: o_alpha and o_beta as above, then
//   case 1: o_beta < (o_alpha)^w        -> (o_alpha)^w
//   case 2: o_beta an w-power and no escaping body of full degree eventually
//           avoids its owner's pump word -> o_beta
//   case 3: otherwise                    -> o_beta * w
// Requires all lower components solved and pump words computed.
ComponentSolution solve_recursive_component(const Grammar& g, const ComponentTable& comps,
                                            const OrderTypeTable& t, int comp_id,
                                            const Limits& limits = {});

// Order type of the union of the forms' languages.  Every form must begin
// with a terminal or be empty, and every mentioned nonterminal must be
// solved.  Throws BudgetExceededError when the step budget, the recursion
// depth cap or the prefix search cap is exceeded (all signal that the input
// is not an ordinal grammar).
Ordinal order_type_of_forms(const Grammar& g, const ComponentTable& comps,
                            const OrderTypeTable& t, const FormSet& forms,
                            const Limits& limits = {});

// Full pipeline result for one grammar.  For a finite language `components`
// and `table` stay empty and the order type is the word count.
struct GrammarAnalysis {
  NormalizeOutcome outcome;
  ComponentTable components;
  OrderTypeTable table;
  Ordinal order_type;
};

GrammarAnalysis analyze_grammar(const Grammar& g, const Limits& limits = {});
Ordinal order_type_of_grammar(const Grammar& g, const Limits& limits = {});
// True iff the two languages are order-isomorphic, i.e. their order types
// have equal Cantor normal forms.
bool isomorphic(const Grammar& g1, const Grammar& g2, const Limits& limits = {});

}  // namespace ordgram
