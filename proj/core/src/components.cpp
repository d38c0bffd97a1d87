#include "ordgram/components.hpp"

#include <algorithm>
#include <map>

#include "internal/scc.hpp"
#include "ordgram/errors.hpp"

namespace ordgram {

ComponentTable compute_components(const Grammar& g) {
  const std::size_t n = g.nonterminal_count();
  const std::size_t total = n + g.alphabet.size();
  std::vector<std::vector<int>> adj(total);
  std::vector<bool> self_edge(n, false);
  ComponentTable t;
  for (std::size_t a = 0; a < n; ++a)
    for (const SForm& body : g.productions[a])
      for (const Symbol& s : body) {
        int to = s.terminal ? static_cast<int>(n) + g.alphabet.rank(static_cast<char>(s.id))
                            : s.id;
        adj[a].push_back(to);
        if (!s.terminal && s.id == static_cast<int>(a)) self_edge[a] = true;
      }
  auto [count, comp] = internal::strongly_connected_components(adj);
  t.component_count = count;
  t.component = std::move(comp);

  std::vector<int> nt_members(static_cast<std::size_t>(count), 0);
  for (std::size_t a = 0; a < n; ++a) ++nt_members[static_cast<std::size_t>(t.component[a])];
  t.recursive.assign(n, false);
  for (std::size_t a = 0; a < n; ++a)
    t.recursive[a] = nt_members[static_cast<std::size_t>(t.component[a])] >= 2 || self_edge[a];

  // Component ids are in reverse topological order, so processing them in
  // ascending order sees every successor first.
  std::vector<int> comp_height(static_cast<std::size_t>(count), 0);
  std::vector<std::vector<int>> nodes_by_comp(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < total; ++v)
    nodes_by_comp[static_cast<std::size_t>(t.component[v])].push_back(static_cast<int>(v));
  for (int c = 0; c < count; ++c)
    for (int v : nodes_by_comp[static_cast<std::size_t>(c)])
      for (int w : adj[static_cast<std::size_t>(v)]) {
        int cw = t.component[static_cast<std::size_t>(w)];
        if (cw != c) comp_height[static_cast<std::size_t>(c)] =
            std::max(comp_height[static_cast<std::size_t>(c)], comp_height[static_cast<std::size_t>(cw)] + 1);
      }
  t.height.resize(total);
  for (std::size_t v = 0; v < total; ++v)
    t.height[v] = comp_height[static_cast<std::size_t>(t.component[v])];
  t.u.assign(n, "");
  return t;
}

ProductionParts classify_production(const Grammar& g, const ComponentTable& t, int owner,
                                    const SForm& body) {
  (void)g;
  ProductionParts parts;
  int comp = t.component[static_cast<std::size_t>(owner)];
  for (const Symbol& s : body) {
    bool in_comp = !s.terminal && t.component[static_cast<std::size_t>(s.id)] == comp;
    if (in_comp) {
      ++parts.component_occurrences;
      if (parts.component_occurrences == 1) parts.partner = s.id;
      continue;
    }
    if (parts.component_occurrences == 0) {
      if (s.terminal)
        parts.head_word += static_cast<char>(s.id);
      else
        parts.clean_head = false;
    } else if (parts.component_occurrences == 1) {
      parts.tail.push_back(s);
    }
  }
  return parts;
}

namespace {

struct ComponentEdge {
  int from;  // local member index
  int to;
  std::string label;
};

// Pump words for one component's members, keyed by nonterminal id.
std::map<int, std::string> component_pump_words(const Grammar& g, const ComponentTable& t,
                                                const std::vector<int>& members) {
  std::vector<int> local(g.nonterminal_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

  std::vector<ComponentEdge> edges;
  std::vector<std::vector<int>> out(members.size());  // edge indices per local node
  for (std::size_t i = 0; i < members.size(); ++i) {
    int x = members[i];
    for (const SForm& body : g.productions[static_cast<std::size_t>(x)]) {
      ProductionParts parts = classify_production(g, t, x, body);
      if (parts.component_occurrences == 0) continue;
      if (parts.component_occurrences > 1)
        throw NotAnOrdinalGrammar("production of " + g.name_of(x) +
                                  " uses two symbols of its own component");
      if (!parts.clean_head)
        throw NotAnOrdinalGrammar("production of " + g.name_of(x) +
                                  " has a nonterminal before its component symbol");
      if (parts.head_word.empty())
        throw NotAnOrdinalGrammar("production of " + g.name_of(x) +
                                  " starts with its component symbol");
      out[i].push_back(static_cast<int>(edges.size()));
      edges.push_back({static_cast<int>(i), local[static_cast<std::size_t>(parts.partner)],
                       parts.head_word});
    }
  }

  // Shortest cycle through the first member, by breadth-first search.
  const int src = 0;
  std::vector<int> parent_edge(members.size(), -1);
  std::vector<bool> visited(members.size(), false);
  std::vector<int> queue{src};
  visited[static_cast<std::size_t>(src)] = true;
  int closing_edge = -1;
  for (std::size_t qi = 0; qi < queue.size() && closing_edge < 0; ++qi) {
    int y = queue[qi];
    for (int ei : out[static_cast<std::size_t>(y)]) {
      const ComponentEdge& e = edges[static_cast<std::size_t>(ei)];
      if (e.to == src) {
        closing_edge = ei;
        break;
      }
      if (!visited[static_cast<std::size_t>(e.to)]) {
        visited[static_cast<std::size_t>(e.to)] = true;
        parent_edge[static_cast<std::size_t>(e.to)] = ei;
        queue.push_back(e.to);
      }
    }
  }
  if (closing_edge < 0)
    throw Error("internal: no cycle found through a recursive nonterminal");
  std::string cycle_label = edges[static_cast<std::size_t>(closing_edge)].label;
  for (int at = edges[static_cast<std::size_t>(closing_edge)].from; at != src;) {
    const ComponentEdge& e = edges[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(at)])];
    cycle_label = e.label + cycle_label;
    at = e.from;
  }
  std::string u = primitive_root(cycle_label);
  const std::size_t m = u.size();

  // Every edge label must follow the periodic pattern of u; phases assign the
  // rotation each member sees.  A mismatch means two cycles disagree, so the
  // input cannot be an ordinal grammar.
  std::vector<int> phase(members.size(), -1);
  phase[static_cast<std::size_t>(src)] = 0;
  std::vector<int> order{src};
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int y = order[qi];
    for (int ei : out[static_cast<std::size_t>(y)]) {
      const ComponentEdge& e = edges[static_cast<std::size_t>(ei)];
      int p = (phase[static_cast<std::size_t>(y)] + static_cast<int>(e.label.size())) % static_cast<int>(m);
      if (phase[static_cast<std::size_t>(e.to)] == -1) {
        phase[static_cast<std::size_t>(e.to)] = p;
        order.push_back(e.to);
      }
    }
  }
  for (const ComponentEdge& e : edges) {
    int py = phase[static_cast<std::size_t>(e.from)];
    int pz = phase[static_cast<std::size_t>(e.to)];
    if (py < 0 || pz < 0)
      throw Error("internal: component member unreachable inside its own component");
    for (std::size_t i = 0; i < e.label.size(); ++i)
      if (e.label[i] != u[(static_cast<std::size_t>(py) + i) % m])
        throw NotAnOrdinalGrammar("cycle labels in the component of " +
                                  g.name_of(members[static_cast<std::size_t>(e.from)]) +
                                  " are not powers of a common word");
    if ((py + static_cast<int>(e.label.size())) % static_cast<int>(m) != pz)
      throw NotAnOrdinalGrammar("cycle labels in the component of " +
                                g.name_of(members[static_cast<std::size_t>(e.from)]) +
                                " are not powers of a common word");
  }

  std::map<int, std::string> result;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t p = static_cast<std::size_t>(phase[i]);
    result[members[i]] = u.substr(p) + u.substr(0, p);
  }
  return result;
}

}  // namespace

void compute_all_u(const Grammar& g, ComponentTable& t) {
  const std::size_t n = g.nonterminal_count();
  t.u.assign(n, "");
  std::map<int, std::vector<int>> by_comp;
  for (std::size_t a = 0; a < n; ++a)
    if (t.recursive[a]) by_comp[t.component[a]].push_back(static_cast<int>(a));
  for (const auto& [comp, members] : by_comp) {
    auto words = component_pump_words(g, t, members);
    for (const auto& [nt, u] : words) t.u[static_cast<std::size_t>(nt)] = u;
  }
}

std::string compute_u(const Grammar& g, const ComponentTable& t, int nt) {
  if (!t.recursive[static_cast<std::size_t>(nt)])
    throw DomainError("pump word requested for a nonrecursive nonterminal");
  if (!t.u[static_cast<std::size_t>(nt)].empty()) return t.u[static_cast<std::size_t>(nt)];
  std::vector<int> members;
  for (std::size_t a = 0; a < g.nonterminal_count(); ++a)
    if (t.component[a] == t.component[static_cast<std::size_t>(nt)])
      members.push_back(static_cast<int>(a));
  return component_pump_words(g, t, members).at(nt);
}

}  // namespace ordgram
