#include "ordgram/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "internal/scc.hpp"
#include "ordgram/errors.hpp"

namespace ordgram {

namespace {

bool lower_letter(char c) { return std::islower(static_cast<unsigned char>(c)); }

bool terminal_token(const std::string& t) { return t.size() == 1 && lower_letter(t[0]); }

bool nonterminal_token(const std::string& t) {
  if (t.empty() || !std::isupper(static_cast<unsigned char>(t[0]))) return false;
  return std::all_of(t.begin() + 1, t.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct GrammarBuilder {
  Alphabet alphabet;
  bool have_order = false;
  bool have_start = false;
  std::string start_name;
  std::map<std::string, int, std::less<>> nt_index;
  std::vector<std::string> names;
  std::vector<std::vector<SForm>> prods;
  std::vector<std::set<SForm>> seen;

  int nt_id(const std::string& name) {
    auto it = nt_index.find(name);
    if (it != nt_index.end()) return it->second;
    int id = static_cast<int>(names.size());
    nt_index.emplace(name, id);
    names.push_back(name);
    prods.emplace_back();
    seen.emplace_back();
    return id;
  }

  void order_line(const std::string& rest, std::size_t line) {
    if (have_order) throw ParseError("duplicate order header", line);
    std::string compact;
    for (char c : rest)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    std::string letters;
    std::size_t pos = 0;
    for (;;) {
      std::size_t lt = compact.find('<', pos);
      std::string piece = compact.substr(pos, lt == std::string::npos ? lt : lt - pos);
      if (piece.size() != 1 || !lower_letter(piece[0]))
        throw ParseError("order header expects single lowercase letters separated by '<'", line);
      letters += piece[0];
      if (lt == std::string::npos) break;
      pos = lt + 1;
    }
    try {
      alphabet = Alphabet(letters);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line);
    }
    have_order = true;
  }

  void start_line(const std::string& rest, std::size_t line) {
    if (have_start) throw ParseError("duplicate start header", line);
    auto toks = split_ws(rest);
    if (toks.size() != 1 || !nonterminal_token(toks[0]))
      throw ParseError("start header expects one nonterminal name", line);
    start_name = toks[0];
    have_start = true;
  }

  void production_line(const std::vector<std::string>& toks, std::size_t line) {
    if (!have_order) throw ParseError("order header must precede productions", line);
    if (!nonterminal_token(toks[0]))
      throw ParseError("production must start with a nonterminal name", line);
    if (toks.size() < 2 || toks[1] != "->") throw ParseError("expected '->'", line);
    int lhs = nt_id(toks[0]);
    std::vector<std::vector<std::string>> groups(1);
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (toks[i] == "|")
        groups.emplace_back();
      else
        groups.back().push_back(toks[i]);
    }
    for (const auto& group : groups) {
      SForm body;
      if (group.empty()) throw ParseError("empty alternative; use _eps for the empty body", line);
      if (group.size() == 1 && group[0] == "_eps") {
        // empty body
      } else {
        for (const auto& tok : group) {
          if (tok == "_eps") throw ParseError("_eps must stand alone in its alternative", line);
          if (terminal_token(tok)) {
            if (!alphabet.contains(tok[0]))
              throw ParseError("terminal '" + tok + "' is not declared in the order header", line);
            body.push_back(Symbol{true, static_cast<int>(tok[0])});
          } else if (nonterminal_token(tok)) {
            body.push_back(Symbol{false, nt_id(tok)});
          } else {
            throw ParseError("invalid symbol token '" + tok + "'", line);
          }
        }
      }
      if (seen[static_cast<std::size_t>(lhs)].insert(body).second)
        prods[static_cast<std::size_t>(lhs)].push_back(std::move(body));
    }
  }

  Grammar finish() {
    if (!have_order) throw ParseError("missing order header", 0);
    if (!have_start) throw ParseError("missing start header", 0);
    Grammar g;
    g.alphabet = alphabet;
    g.start = nt_id(start_name);
    g.nonterminal_names = std::move(names);
    g.productions = std::move(prods);
    g.productions.resize(g.nonterminal_names.size());
    return g;
  }
};

}  // namespace

Symbol Grammar::terminal_symbol(char c) const {
  alphabet.rank(c);  // validates
  return Symbol{true, static_cast<int>(c)};
}

Symbol Grammar::nonterminal_symbol(std::string_view name) const {
  for (std::size_t i = 0; i < nonterminal_names.size(); ++i)
    if (nonterminal_names[i] == name) return Symbol{false, static_cast<int>(i)};
  throw DomainError("unknown nonterminal '" + std::string(name) + "'");
}

Grammar parse_grammar(std::string_view text) {
  GrammarBuilder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "order:" || toks[0].rfind("order:", 0) == 0) {
      std::string rest = line.substr(line.find("order:") + 6);
      b.order_line(rest, line_no);
    } else if (toks[0] == "start:" || toks[0].rfind("start:", 0) == 0) {
      std::string rest = line.substr(line.find("start:") + 6);
      b.start_line(rest, line_no);
    } else {
      b.production_line(toks, line_no);
    }
  }
  return b.finish();
}

Grammar parse_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

std::string render_form(const Grammar& g, const SForm& form) {
  if (form.empty()) return "_eps";
  std::string out;
  for (const Symbol& s : form) {
    if (!out.empty()) out += ' ';
    if (s.terminal)
      out += static_cast<char>(s.id);
    else
      out += g.name_of(s.id);
  }
  return out;
}

std::string render_grammar(const Grammar& g) {
  std::string out = "order: ";
  const std::string& letters = g.alphabet.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += " < ";
    out += letters[i];
  }
  out += "\nstart: " + g.name_of(g.start) + "\n";
  for (std::size_t a = 0; a < g.nonterminal_count(); ++a) {
    if (g.productions[a].empty()) continue;
    out += g.nonterminal_names[a] + " ->";
    for (std::size_t i = 0; i < g.productions[a].size(); ++i) {
      out += i == 0 ? " " : " | ";
      out += render_form(g, g.productions[a][i]);
    }
    out += '\n';
  }
  return out;
}

SForm parse_form(const Grammar& g, std::string_view text) {
  auto toks = split_ws(std::string(text));
  if (toks.size() == 1 && toks[0] == "_eps") return {};
  SForm form;
  for (const auto& tok : toks) {
    if (terminal_token(tok))
      form.push_back(g.terminal_symbol(tok[0]));
    else if (nonterminal_token(tok))
      form.push_back(g.nonterminal_symbol(tok));
    else
      throw ParseError("invalid symbol token '" + tok + "'");
  }
  return form;
}

std::vector<bool> productive_nonterminals(const Grammar& g) {
  std::size_t n = g.nonterminal_count();
  std::vector<bool> productive(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (productive[a]) continue;
      for (const SForm& body : g.productions[a]) {
        bool all = true;
        for (const Symbol& s : body)
          if (!s.terminal && !productive[static_cast<std::size_t>(s.id)]) {
            all = false;
            break;
          }
        if (all) {
          productive[a] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return productive;
}

std::vector<bool> nullable_nonterminals(const Grammar& g) {
  std::size_t n = g.nonterminal_count();
  std::vector<bool> nullable(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (nullable[a]) continue;
      for (const SForm& body : g.productions[a]) {
        bool all = true;
        for (const Symbol& s : body)
          if (s.terminal || !nullable[static_cast<std::size_t>(s.id)]) {
            all = false;
            break;
          }
        if (all) {
          nullable[a] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return nullable;
}

std::vector<bool> reachable_nonterminals(const Grammar& g) {
  std::size_t n = g.nonterminal_count();
  std::vector<bool> reachable(n, false);
  std::vector<int> queue;
  reachable[static_cast<std::size_t>(g.start)] = true;
  queue.push_back(g.start);
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (const SForm& body : g.productions[static_cast<std::size_t>(a)])
      for (const Symbol& s : body)
        if (!s.terminal && !reachable[static_cast<std::size_t>(s.id)]) {
          reachable[static_cast<std::size_t>(s.id)] = true;
          queue.push_back(s.id);
        }
  }
  return reachable;
}

std::vector<bool> derives_nonempty_word(const Grammar& g) {
  auto productive = productive_nonterminals(g);
  std::size_t n = g.nonterminal_count();
  std::vector<bool> flag(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (flag[a]) continue;
      for (const SForm& body : g.productions[a]) {
        bool all = true;
        bool some = false;
        for (const Symbol& s : body) {
          if (s.terminal) {
            some = true;
          } else if (!productive[static_cast<std::size_t>(s.id)]) {
            all = false;
            break;
          } else if (flag[static_cast<std::size_t>(s.id)]) {
            some = true;
          }
        }
        if (all && some) {
          flag[a] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return flag;
}

bool is_empty(const Grammar& g, const FormSet& forms) {
  auto productive = productive_nonterminals(g);
  for (const SForm& form : forms) {
    bool derives = true;
    for (const Symbol& s : form)
      if (!s.terminal && !productive[static_cast<std::size_t>(s.id)]) {
        derives = false;
        break;
      }
    if (derives) return false;
  }
  return true;
}

namespace {

struct OccurrenceEdge {
  int from;
  int to;
  bool pump;  // some sibling symbol in the body derives a nonempty word
};

// Occurrence edges restricted to fully productive bodies.
std::vector<OccurrenceEdge> occurrence_edges(const Grammar& g) {
  auto productive = productive_nonterminals(g);
  auto nonempty = derives_nonempty_word(g);
  std::vector<OccurrenceEdge> edges;
  for (std::size_t a = 0; a < g.nonterminal_count(); ++a) {
    for (const SForm& body : g.productions[a]) {
      bool all = true;
      for (const Symbol& s : body)
        if (!s.terminal && !productive[static_cast<std::size_t>(s.id)]) {
          all = false;
          break;
        }
      if (!all) continue;
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i].terminal) continue;
        bool pump = false;
        for (std::size_t j = 0; j < body.size(); ++j) {
          if (j == i) continue;
          const Symbol& s = body[j];
          if (s.terminal || nonempty[static_cast<std::size_t>(s.id)]) {
            pump = true;
            break;
          }
        }
        edges.push_back({static_cast<int>(a), body[i].id, pump});
      }
    }
  }
  return edges;
}

std::vector<bool> reach_via(const std::vector<OccurrenceEdge>& edges, std::size_t n, int from) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) adj[static_cast<std::size_t>(e.from)].push_back(e.to);
  std::vector<bool> reach(n, false);
  std::vector<int> queue{from};
  reach[static_cast<std::size_t>(from)] = true;
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (int b : adj[static_cast<std::size_t>(a)])
      if (!reach[static_cast<std::size_t>(b)]) {
        reach[static_cast<std::size_t>(b)] = true;
        queue.push_back(b);
      }
  }
  return reach;
}

}  // namespace

bool is_finite(const Grammar& g, int nt) {
  std::size_t n = g.nonterminal_count();
  auto edges = occurrence_edges(g);
  auto reach = reach_via(edges, n, nt);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) adj[static_cast<std::size_t>(e.from)].push_back(e.to);
  auto [count, comp] = internal::strongly_connected_components(adj);
  (void)count;
  for (const auto& e : edges)
    if (e.pump && reach[static_cast<std::size_t>(e.from)] &&
        comp[static_cast<std::size_t>(e.from)] == comp[static_cast<std::size_t>(e.to)])
      return false;
  return true;
}

std::vector<std::string> finite_words(const Grammar& g, int nt, const Limits& limits) {
  if (!is_finite(g, nt)) throw DomainError("finite_words applied to an infinite language");
  std::size_t n = g.nonterminal_count();
  auto productive = productive_nonterminals(g);
  auto reach = reach_via(occurrence_edges(g), n, nt);
  std::vector<std::set<std::string>> words(n);
  std::uint64_t total = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!reach[a]) continue;
      for (const SForm& body : g.productions[a]) {
        bool usable = true;
        for (const Symbol& s : body)
          if (!s.terminal && !productive[static_cast<std::size_t>(s.id)]) {
            usable = false;
            break;
          }
        if (!usable) continue;
        std::vector<std::string> acc{""};
        for (const Symbol& s : body) {
          std::vector<std::string> next;
          if (s.terminal) {
            next.reserve(acc.size());
            for (const auto& w : acc) next.push_back(w + static_cast<char>(s.id));
          } else {
            const auto& ws = words[static_cast<std::size_t>(s.id)];
            if (ws.empty()) {
              usable = false;
              break;
            }
            for (const auto& w : acc)
              for (const auto& t : ws) next.push_back(w + t);
          }
          if (next.size() > limits.enumeration_budget)
            throw BudgetExceededError("enumeration budget exceeded while listing a finite language");
          acc = std::move(next);
        }
        if (!usable) continue;
        for (auto& w : acc)
          if (words[a].insert(std::move(w)).second) {
            changed = true;
            if (++total > limits.enumeration_budget)
              throw BudgetExceededError("enumeration budget exceeded while listing a finite language");
          }
      }
    }
  }
  std::vector<std::string> out(words[static_cast<std::size_t>(nt)].begin(),
                               words[static_cast<std::size_t>(nt)].end());
  std::sort(out.begin(), out.end(), [&](const std::string& x, const std::string& y) {
    return lex_cmp(x, y, g.alphabet) == std::strong_ordering::less;
  });
  return out;
}

namespace {

using LengthTable = std::vector<std::set<std::string>>;  // index = exact length

// Words derivable from `body` of each length <= max_len, given per-nonterminal
// tables.  Total stored strings are charged against `budget`.
LengthTable combine_body(const SForm& body, const std::vector<LengthTable>& table,
                         std::size_t max_len, std::uint64_t& budget) {
  LengthTable acc(max_len + 1);
  acc[0].insert("");
  auto charge = [&budget](std::uint64_t k) {
    if (k > budget) throw BudgetExceededError("enumeration budget exceeded");
    budget -= k;
  };
  for (const Symbol& s : body) {
    LengthTable next(max_len + 1);
    if (s.terminal) {
      for (std::size_t l = 0; l + 1 <= max_len; ++l)
        for (const auto& w : acc[l]) {
          next[l + 1].insert(w + static_cast<char>(s.id));
          charge(1);
        }
    } else {
      const LengthTable& ws = table[static_cast<std::size_t>(s.id)];
      for (std::size_t l = 0; l <= max_len; ++l)
        for (const auto& w : acc[l])
          for (std::size_t m = 0; l + m <= max_len; ++m)
            for (const auto& t : ws[m]) {
              next[l + m].insert(w + t);
              charge(1);
            }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<std::string> lex_enumerate(const Grammar& g, const FormSet& forms,
                                       std::size_t max_len, const Limits& limits) {
  std::size_t n = g.nonterminal_count();
  std::vector<LengthTable> table(n, LengthTable(max_len + 1));
  std::uint64_t budget = limits.enumeration_budget;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (const SForm& body : g.productions[a]) {
        LengthTable acc = combine_body(body, table, max_len, budget);
        for (std::size_t l = 0; l <= max_len; ++l)
          for (const auto& w : acc[l])
            if (table[a][l].insert(w).second) changed = true;
      }
  }
  std::set<std::string> result;
  for (const SForm& form : forms) {
    LengthTable acc = combine_body(form, table, max_len, budget);
    for (std::size_t l = 0; l <= max_len; ++l)
      result.insert(acc[l].begin(), acc[l].end());
  }
  std::vector<std::string> out(result.begin(), result.end());
  std::sort(out.begin(), out.end(), [&](const std::string& x, const std::string& y) {
    return lex_cmp(x, y, g.alphabet) == std::strong_ordering::less;
  });
  return out;
}

Grammar strip_useless(const Grammar& g) {
  std::size_t n = g.nonterminal_count();
  auto productive = productive_nonterminals(g);
  std::vector<std::vector<SForm>> prods(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const SForm& body : g.productions[a]) {
      bool all = true;
      for (const Symbol& s : body)
        if (!s.terminal && !productive[static_cast<std::size_t>(s.id)]) {
          all = false;
          break;
        }
      if (all) prods[a].push_back(body);
    }
  std::vector<bool> keep(n, false);
  std::vector<int> queue{g.start};
  keep[static_cast<std::size_t>(g.start)] = true;
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (const SForm& body : prods[static_cast<std::size_t>(a)])
      for (const Symbol& s : body)
        if (!s.terminal && !keep[static_cast<std::size_t>(s.id)]) {
          keep[static_cast<std::size_t>(s.id)] = true;
          queue.push_back(s.id);
        }
  }
  return rebuild_grammar(g, keep, prods);
}

Grammar rebuild_grammar(const Grammar& g, const std::vector<bool>& keep,
                        const std::vector<std::vector<SForm>>& prods) {
  std::size_t n = g.nonterminal_count();
  std::vector<int> remap(n, -1);
  Grammar out;
  out.alphabet = g.alphabet;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) {
      remap[i] = static_cast<int>(out.nonterminal_names.size());
      out.nonterminal_names.push_back(g.nonterminal_names[i]);
    }
  if (remap[static_cast<std::size_t>(g.start)] < 0)
    throw Error("internal: start symbol dropped during rebuild");
  out.start = remap[static_cast<std::size_t>(g.start)];
  out.productions.resize(out.nonterminal_names.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    std::set<SForm> seen;
    for (const SForm& body : prods[i]) {
      SForm mapped;
      mapped.reserve(body.size());
      for (const Symbol& s : body) {
        if (s.terminal) {
          mapped.push_back(s);
        } else {
          if (remap[static_cast<std::size_t>(s.id)] < 0)
            throw Error("internal: production mentions a dropped nonterminal");
          mapped.push_back(Symbol{false, remap[static_cast<std::size_t>(s.id)]});
        }
      }
      if (seen.insert(mapped).second)
        out.productions[static_cast<std::size_t>(remap[i])].push_back(std::move(mapped));
    }
  }
  return out;
}

}  // namespace ordgram
