#include "ordgram/normalize.hpp"

#include <algorithm>
#include <set>

#include "internal/scc.hpp"
#include "ordgram/components.hpp"
#include "ordgram/errors.hpp"

namespace ordgram {

namespace {

void check_production_budget(const Grammar& g, const Limits& limits) {
  std::uint64_t total = 0;
  for (const auto& alts : g.productions) total += alts.size();
  if (total > limits.production_budget)
    throw BudgetExceededError("production budget exceeded during normalization");
}

// Replaces every occurrence of the nonterminals selected by `pick` with each
// of their replacement forms (cross product over occurrences).
std::vector<SForm> expand_occurrences(const SForm& body, const std::vector<bool>& pick,
                                      const std::vector<std::vector<SForm>>& replacements,
                                      const Limits& limits) {
  std::vector<SForm> acc{SForm{}};
  for (const Symbol& s : body) {
    if (!s.terminal && pick[static_cast<std::size_t>(s.id)]) {
      const auto& reps = replacements[static_cast<std::size_t>(s.id)];
      std::vector<SForm> next;
      next.reserve(acc.size() * reps.size());
      for (const SForm& f : acc)
        for (const SForm& r : reps) {
          SForm nf = f;
          nf.insert(nf.end(), r.begin(), r.end());
          next.push_back(std::move(nf));
        }
      acc = std::move(next);
    } else {
      for (SForm& f : acc) f.push_back(s);
    }
    if (acc.size() > limits.production_budget)
      throw BudgetExceededError("production budget exceeded during substitution");
  }
  return acc;
}

Grammar substitute_finite_nonterminals(const Grammar& g, const Limits& limits) {
  const std::size_t n = g.nonterminal_count();
  std::vector<bool> finite_nt(n, false);
  bool any = false;
  for (std::size_t a = 0; a < n; ++a) {
    if (static_cast<int>(a) == g.start) continue;
    if (is_finite(g, static_cast<int>(a))) {
      finite_nt[a] = true;
      any = true;
    }
  }
  if (!any) return g;
  std::vector<std::vector<SForm>> replacements(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!finite_nt[a]) continue;
    for (const std::string& w : finite_words(g, static_cast<int>(a), limits)) {
      SForm f;
      for (char c : w) f.push_back(Symbol{true, static_cast<int>(c)});
      replacements[a].push_back(std::move(f));
    }
  }
  std::vector<std::vector<SForm>> prods(n);
  std::vector<bool> keep(n);
  for (std::size_t a = 0; a < n; ++a) {
    keep[a] = !finite_nt[a];
    if (!keep[a]) continue;
    for (const SForm& body : g.productions[a]) {
      auto expanded = expand_occurrences(body, finite_nt, replacements, limits);
      prods[a].insert(prods[a].end(), expanded.begin(), expanded.end());
    }
  }
  return rebuild_grammar(g, keep, prods);
}

Grammar eliminate_chains(const Grammar& g) {
  const std::size_t n = g.nonterminal_count();
  Grammar out = g;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> closure{static_cast<int>(a)};
    std::vector<bool> in_closure(n, false);
    in_closure[a] = true;
    for (std::size_t qi = 0; qi < closure.size(); ++qi)
      for (const SForm& body : g.productions[static_cast<std::size_t>(closure[qi])])
        if (body.size() == 1 && !body[0].terminal &&
            !in_closure[static_cast<std::size_t>(body[0].id)]) {
          in_closure[static_cast<std::size_t>(body[0].id)] = true;
          closure.push_back(body[0].id);
        }
    std::vector<SForm> alts;
    std::set<SForm> seen;
    for (int b : closure)
      for (const SForm& body : g.productions[static_cast<std::size_t>(b)]) {
        if (body.size() == 1 && !body[0].terminal) continue;
        if (seen.insert(body).second) alts.push_back(body);
      }
    out.productions[a] = std::move(alts);
  }
  return out;
}

// Graph of "body begins with this nonterminal" edges.
std::vector<std::vector<int>> head_graph(const Grammar& g) {
  std::vector<std::vector<int>> adj(g.nonterminal_count());
  for (std::size_t a = 0; a < g.nonterminal_count(); ++a)
    for (const SForm& body : g.productions[a])
      if (!body.empty() && !body[0].terminal) adj[a].push_back(body[0].id);
  return adj;
}

void detect_left_recursion(const Grammar& g) {
  auto adj = head_graph(g);
  const std::size_t n = g.nonterminal_count();
  for (std::size_t a = 0; a < n; ++a)
    for (int b : adj[a])
      if (b == static_cast<int>(a))
        throw LeftRecursionError("LeftRecursionDetected: cycle " + g.name_of(b) + " -> " +
                                 g.name_of(b));
  auto [count, comp] = internal::strongly_connected_components(adj);
  std::vector<int> members(static_cast<std::size_t>(count), 0);
  for (std::size_t a = 0; a < n; ++a) ++members[static_cast<std::size_t>(comp[a])];
  for (std::size_t a = 0; a < n; ++a) {
    if (members[static_cast<std::size_t>(comp[a])] < 2) continue;
    // reconstruct one cycle through a for the diagnostic
    std::vector<int> parent(n, -1);
    std::vector<bool> visited(n, false);
    std::vector<int> queue{static_cast<int>(a)};
    visited[a] = true;
    int back_from = -1;
    for (std::size_t qi = 0; qi < queue.size() && back_from < 0; ++qi) {
      int y = queue[qi];
      for (int z : adj[static_cast<std::size_t>(y)]) {
        if (comp[static_cast<std::size_t>(z)] != comp[a]) continue;
        if (z == static_cast<int>(a)) {
          back_from = y;
          break;
        }
        if (!visited[static_cast<std::size_t>(z)]) {
          visited[static_cast<std::size_t>(z)] = true;
          parent[static_cast<std::size_t>(z)] = y;
          queue.push_back(z);
        }
      }
    }
    std::vector<int> path;
    for (int at = back_from; at != -1; at = parent[static_cast<std::size_t>(at)])
      path.push_back(at);
    std::string msg = "LeftRecursionDetected: cycle " + g.name_of(static_cast<int>(a));
    for (auto it = path.rbegin(); it != path.rend(); ++it) msg += " -> " + g.name_of(*it);
    msg += " -> " + g.name_of(static_cast<int>(a));
    throw LeftRecursionError(msg);
  }
}

Grammar left_corner_expand(const Grammar& g, const Limits& limits) {
  auto adj = head_graph(g);
  auto [count, comp] = internal::strongly_connected_components(adj);
  (void)count;
  const std::size_t n = g.nonterminal_count();
  std::vector<int> order(n);
  for (std::size_t a = 0; a < n; ++a) order[a] = static_cast<int>(a);
  // components are singletons here (no left recursion); ascending component
  // id processes referenced heads before their users
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return comp[static_cast<std::size_t>(x)] < comp[static_cast<std::size_t>(y)];
  });
  Grammar out = g;
  for (int a : order) {
    std::vector<SForm> alts;
    std::set<SForm> seen;
    for (const SForm& body : out.productions[static_cast<std::size_t>(a)]) {
      if (!body.empty() && !body[0].terminal) {
        const auto& heads = out.productions[static_cast<std::size_t>(body[0].id)];
        for (const SForm& delta : heads) {
          SForm nb = delta;
          nb.insert(nb.end(), body.begin() + 1, body.end());
          if (seen.insert(nb).second) alts.push_back(std::move(nb));
        }
      } else if (seen.insert(body).second) {
        alts.push_back(body);
      }
      if (alts.size() > limits.production_budget)
        throw BudgetExceededError("production budget exceeded during head expansion");
    }
    out.productions[static_cast<std::size_t>(a)] = std::move(alts);
  }
  return out;
}

Grammar substitute_away(const Grammar& g, int x, const Limits& limits) {
  const std::size_t n = g.nonterminal_count();
  std::vector<bool> pick(n, false);
  pick[static_cast<std::size_t>(x)] = true;
  std::vector<std::vector<SForm>> replacements(n);
  replacements[static_cast<std::size_t>(x)] = g.productions[static_cast<std::size_t>(x)];
  std::vector<std::vector<SForm>> prods(n);
  std::vector<bool> keep(n, true);
  keep[static_cast<std::size_t>(x)] = false;
  for (std::size_t a = 0; a < n; ++a) {
    if (!keep[a]) continue;
    for (const SForm& body : g.productions[a]) {
      auto expanded = expand_occurrences(body, pick, replacements, limits);
      prods[a].insert(prods[a].end(), expanded.begin(), expanded.end());
    }
  }
  return rebuild_grammar(g, keep, prods);
}

}  // namespace

std::vector<std::string> check_shape(const Grammar& g) {
  ComponentTable t = compute_components(g);
  std::vector<std::string> violations;
  for (std::size_t a = 0; a < g.nonterminal_count(); ++a)
    for (const SForm& body : g.productions[a]) {
      std::string where = g.name_of(static_cast<int>(a)) + " -> " + render_form(g, body);
      if (body.empty() || !body[0].terminal)
        violations.push_back(where + ": body must begin with a terminal");
      ProductionParts parts = classify_production(g, t, static_cast<int>(a), body);
      if (parts.component_occurrences > 1)
        violations.push_back(where + ": two symbols of the owner's component");
      else if (parts.component_occurrences == 1 && !parts.clean_head)
        violations.push_back(where + ": nonterminal before the component symbol");
    }
  return violations;
}

NormalizeOutcome to_normal_form(const Grammar& g0, const Limits& limits) {
  Grammar g = strip_useless(g0);

  if (is_finite(g, g.start)) {
    NormalizeOutcome out;
    out.kind = NormalizeOutcome::Kind::finite;
    out.words = finite_words(g, g.start, limits);
    return out;
  }

  g = strip_useless(substitute_finite_nonterminals(g, limits));
  check_production_budget(g, limits);

  auto nullable = nullable_nonterminals(g);
  for (std::size_t a = 0; a < g.nonterminal_count(); ++a)
    if (nullable[a])
      throw NotAnOrdinalGrammar("nonterminal " + g.name_of(static_cast<int>(a)) +
                                " has an infinite language containing the empty word");

  g = strip_useless(eliminate_chains(g));
  check_production_budget(g, limits);

  detect_left_recursion(g);

  g = strip_useless(left_corner_expand(g, limits));
  check_production_budget(g, limits);

  for (;;) {
    ComponentTable t = compute_components(g);
    int pick = -1;
    for (std::size_t a = 0; a < g.nonterminal_count(); ++a) {
      if (static_cast<int>(a) == g.start || t.recursive[a]) continue;
      if (pick < 0 || t.height[a] < t.height[static_cast<std::size_t>(pick)]) pick = static_cast<int>(a);
    }
    if (pick < 0) break;
    g = strip_useless(substitute_away(g, pick, limits));
    check_production_budget(g, limits);
  }

  for (std::size_t a = 0; a < g.nonterminal_count(); ++a) {
    for (const SForm& body : g.productions[a])
      if (body.empty() || !body[0].terminal)
        throw Error("internal: normalization left a body without a terminal head");
    if (is_finite(g, static_cast<int>(a)))
      throw Error("internal: normalization left a finite-language nonterminal");
  }

  auto violations = check_shape(g);
  if (!violations.empty()) {
    std::string msg = "ShapeViolation:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw ShapeViolationError(msg);
  }

  NormalizeOutcome out;
  out.kind = NormalizeOutcome::Kind::normalized;
  out.grammar = std::move(g);
  return out;
}

}  // namespace ordgram
