#include "ordgram/solver.hpp"

#include <algorithm>
#include <utility>

#include "ordgram/errors.hpp"
#include "ordgram/langops.hpp"

namespace ordgram {

Ordinal OrderTypeTable::order_of(const Symbol& s) const {
  if (s.terminal) return Ordinal(1);
  const auto& slot = order[static_cast<std::size_t>(s.id)];
  if (!slot) throw Error("internal: unsolved nonterminal in a form product");
  return *slot;
}

Ordinal order_type_of_form(const OrderTypeTable& t, const SForm& form) {
  Ordinal result(1);
  for (auto it = form.rbegin(); it != form.rend(); ++it) result = mul(result, t.order_of(*it));
  return result;
}

ComponentSolution solve_recursive_component(const Grammar& g, const ComponentTable& comps,
                                            const OrderTypeTable& t, int comp_id,
                                            const Limits& limits) {
  struct Escape {
    int owner;
    const SForm* body;
    Ordinal type;
  };
  std::vector<Escape> escapes;
  ComponentSolution sol;
  bool have_alpha = false;
  bool have_beta = false;
  for (int x = 0; x < static_cast<int>(g.nonterminal_count()); ++x) {
    if (comps.component[static_cast<std::size_t>(x)] != comp_id) continue;
    for (const SForm& body : g.productions[static_cast<std::size_t>(x)]) {
      ProductionParts parts = classify_production(g, comps, x, body);
      if (parts.component_occurrences == 0) {
        Ordinal ty = order_type_of_form(t, body);
        if (!have_beta || cmp(sol.o_beta, ty) == std::strong_ordering::less) sol.o_beta = ty;
        have_beta = true;
        escapes.push_back({x, &body, std::move(ty)});
      } else {
        Ordinal ty = order_type_of_form(t, parts.tail);
        if (!have_alpha || cmp(sol.o_alpha, ty) == std::strong_ordering::less)
          sol.o_alpha = std::move(ty);
        have_alpha = true;
      }
    }
  }
  if (!have_alpha) throw Error("internal: recursive component without a component production");
  if (!have_beta) throw Error("internal: recursive component without an escaping production");

  sol.gamma = degree(sol.o_alpha);
  sol.delta = degree(sol.o_beta);
  const Ordinal alpha_power = pow_omega(sol.o_alpha);

  // shared by both dispatch routes, evaluated at most once
  std::optional<bool> second_case;
  auto second_case_holds = [&]() {
    if (!second_case) {
      bool holds = is_omega_power(sol.o_beta);
      if (holds)
        for (const Escape& e : escapes) {
          if (cmp(degree(e.type), sol.delta) != std::strong_ordering::equal) continue;
          if (eventually_avoids(g, "", comps.u[static_cast<std::size_t>(e.owner)], *e.body,
                                limits)) {
            holds = false;
            break;
          }
        }
      second_case = holds;
    }
    return *second_case;
  };

  if (cmp(sol.o_beta, alpha_power) == std::strong_ordering::less) {
    sol.case_used = 1;
    sol.value = alpha_power;
  } else if (second_case_holds()) {
    sol.case_used = 2;
    sol.value = sol.o_beta;
  } else {
    sol.case_used = 3;
    sol.value = mul(sol.o_beta, Ordinal::omega());
  }

  if (cmp(sol.delta, mul(sol.gamma, Ordinal::omega())) == std::strong_ordering::less)
    sol.proof_route_value = alpha_power;
  else if (second_case_holds())
    sol.proof_route_value = sol.o_beta;
  else
    sol.proof_route_value = mul(sol.o_beta, Ordinal::omega());

  return sol;
}

namespace {

std::size_t grammar_size(const Grammar& g) {
  std::size_t total = g.nonterminal_count();
  for (const auto& alts : g.productions)
    for (const SForm& body : alts) total += body.size() + 1;
  return total;
}

struct FormOrderer {
  const Grammar& g;
  const ComponentTable& comps;
  const OrderTypeTable& table;
  const Limits& limits;
  std::uint64_t steps = 0;

  void charge() {
    if (++steps > limits.step_budget)
      throw BudgetExceededError("step budget exceeded while ordering sentential forms");
  }

  Ordinal run(const FormSet& forms, std::uint32_t depth) {
    if (depth > limits.depth_cap)
      throw BudgetExceededError("depth cap exceeded while ordering sentential forms");
    if (forms.empty()) return Ordinal(0);

    FormSet left;
    FormSet right = forms;
    SForm peeled;  // the letters peeled off so far, as terminal symbols
    for (;;) {
      charge();
      std::vector<std::pair<SForm, UPWord>> sups;
      sups.reserve(right.size());
      for (const SForm& f : right) sups.emplace_back(f, sup(g, comps, f).value);
      const UPWord* w = &sups.front().second;
      for (const auto& [f, s] : sups)
        if (lex_cmp(*w, s, g.alphabet) == std::strong_ordering::less) w = &s;

      FormSet right1, right2;
      bool have_type = false;
      Ordinal o;
      for (const auto& [f, s] : sups) {
        if (lex_cmp(s, *w, g.alphabet) == std::strong_ordering::equal) {
          right2.insert(f);
          Ordinal ty = order_type_of_form(table, f);
          if (!have_type || cmp(o, ty) == std::strong_ordering::less) o = std::move(ty);
          have_type = true;
        } else {
          right1.insert(f);
        }
      }

      if (is_omega_power(o)) {
        // cut just below the supremum: the shortest prefix of w that already
        // exceeds everything the lower forms generate
        const UPWord top = *w;
        const std::size_t cap = limits.prefix_search_factor *
                                (top.prefix.size() + top.period.size() + grammar_size(g));
        std::string wcut;
        bool found = false;
        for (std::size_t n = 0; n <= cap; ++n) {
          charge();
          wcut = finite_prefix(top, n);
          bool all_below = true;
          for (const SForm& f : right1)
            if (!is_empty(g, quot_geq(g, f, wcut))) {
              all_below = false;
              break;
            }
          if (all_below) {
            found = true;
            break;
          }
          if (top.is_finite() && n >= top.prefix.size()) break;
        }
        if (!found)
          throw BudgetExceededError("prefix search cap exceeded while ordering sentential forms");

        FormSet below = right1;
        for (const SForm& f : right2) {
          FormSet part = quot_less(g, f, wcut);
          below.insert(part.begin(), part.end());
        }
        Ordinal left_part = run(left, depth + 1);
        Ordinal mid_part = run(below, depth + 1);
        return add(add(left_part, mid_part), omega_pow(degree(o)));
      }

      // peel the largest head letter
      bool have_letter = false;
      char a = 0;
      for (const SForm& f : right) {
        if (f.empty()) continue;
        char h = static_cast<char>(f[0].id);
        if (!have_letter || g.alphabet.cmp(a, h) == std::strong_ordering::less) a = h;
        have_letter = true;
      }
      if (!have_letter) throw Error("internal: no headed form while peeling");

      FormSet headed;
      for (const SForm& f : right) {
        if (!f.empty() && static_cast<char>(f[0].id) == a) {
          headed.insert(f);
          continue;
        }
        SForm moved = peeled;
        moved.insert(moved.end(), f.begin(), f.end());
        left.insert(std::move(moved));
      }
      right = letter_quot(g, headed, a);
      if (right.empty()) throw Error("internal: letter quotient emptied the working set");
      peeled.push_back(Symbol{true, static_cast<int>(a)});
    }
  }
};

}  // namespace

Ordinal order_type_of_forms(const Grammar& g, const ComponentTable& comps,
                            const OrderTypeTable& t, const FormSet& forms,
                            const Limits& limits) {
  FormOrderer ord{g, comps, t, limits};
  return ord.run(forms, 0);
}

GrammarAnalysis analyze_grammar(const Grammar& g, const Limits& limits) {
  GrammarAnalysis a;
  a.outcome = to_normal_form(g, limits);
  if (a.outcome.finite_language()) {
    a.order_type = Ordinal(a.outcome.words.size());
    return a;
  }
  const Grammar& nf = *a.outcome.grammar;
  a.components = compute_components(nf);
  compute_all_u(nf, a.components);
  a.table.order.assign(nf.nonterminal_count(), std::nullopt);

  std::vector<std::pair<int, int>> comp_order;  // (height, component id), nonterminals only
  for (std::size_t x = 0; x < nf.nonterminal_count(); ++x) {
    int c = a.components.component[x];
    comp_order.emplace_back(a.components.height[x], c);
  }
  std::sort(comp_order.begin(), comp_order.end());
  comp_order.erase(std::unique(comp_order.begin(), comp_order.end()), comp_order.end());

  for (const auto& [height, c] : comp_order) {
    std::vector<int> members;
    for (std::size_t x = 0; x < nf.nonterminal_count(); ++x)
      if (a.components.component[x] == c) members.push_back(static_cast<int>(x));
    if (members.empty()) continue;
    if (a.components.recursive[static_cast<std::size_t>(members.front())]) {
      ComponentSolution sol = solve_recursive_component(nf, a.components, a.table, c, limits);
      for (int x : members) a.table.order[static_cast<std::size_t>(x)] = sol.value;
      a.table.solutions.emplace(c, std::move(sol));
    } else {
      if (members.size() != 1 || members.front() != nf.start)
        throw Error("internal: nonrecursive nonterminal other than the start in normal form");
      FormSet alts;
      for (const SForm& body : nf.productions[static_cast<std::size_t>(nf.start)])
        alts.insert(body);
      a.table.order[static_cast<std::size_t>(nf.start)] =
          order_type_of_forms(nf, a.components, a.table, alts, limits);
    }
  }

  const auto& result = a.table.order[static_cast<std::size_t>(nf.start)];
  if (!result) throw Error("internal: start symbol left unsolved");
  a.order_type = *result;
  if (!is_algebraic(a.order_type)) throw Error("internal: computed order type out of range");
  return a;
}

Ordinal order_type_of_grammar(const Grammar& g, const Limits& limits) {
  return analyze_grammar(g, limits).order_type;
}

bool isomorphic(const Grammar& g1, const Grammar& g2, const Limits& limits) {
  return cmp(order_type_of_grammar(g1, limits), order_type_of_grammar(g2, limits)) ==
         std::strong_ordering::equal;
}

}  // namespace ordgram
