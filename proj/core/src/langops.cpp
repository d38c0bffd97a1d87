#include "ordgram/langops.hpp"

#include <algorithm>
#include <string>

#include "ordgram/errors.hpp"

namespace ordgram {

SupInfo sup(const Grammar& g, const ComponentTable& t, const SForm& form) {
  std::string prefix;
  for (const Symbol& s : form) {
    if (s.terminal) {
      prefix += static_cast<char>(s.id);
      continue;
    }
    const std::size_t x = static_cast<std::size_t>(s.id);
    if (t.recursive[x]) {
      if (t.u[x].empty()) throw Error("internal: pump word missing in sup");
      return {UPWord::periodic(std::move(prefix), t.u[x]), false};
    }
    SupInfo best;
    bool first = true;
    for (const SForm& alt : g.productions[x]) {
      SupInfo si = sup(g, t, alt);
      if (first) {
        best = std::move(si);
        first = false;
        continue;
      }
      auto c = lex_cmp(best.value, si.value, g.alphabet);
      if (c == std::strong_ordering::less)
        best = std::move(si);
      else if (c == std::strong_ordering::equal && si.attained)
        best.attained = true;
    }
    if (first) throw DomainError("sup of a nonterminal without productions");
    if (!best.attained)
      return {UPWord::periodic(prefix + best.value.prefix, best.value.period), false};
    prefix += best.value.prefix;
  }
  return {UPWord::finite(std::move(prefix)), true};
}

namespace {

void expand_heads_into(const Grammar& g, const SForm& form, FormSet& out, int depth) {
  if (form.empty() || form[0].terminal) {
    out.insert(form);
    return;
  }
  if (depth > static_cast<int>(g.nonterminal_count()) + 1)
    throw Error("internal: head expansion did not reach a terminal");
  for (const SForm& delta : g.productions[static_cast<std::size_t>(form[0].id)]) {
    SForm next = delta;
    next.insert(next.end(), form.begin() + 1, form.end());
    expand_heads_into(g, next, out, depth + 1);
  }
}

SForm prepend_letter(char b, const SForm& f) {
  SForm out;
  out.reserve(f.size() + 1);
  out.push_back(Symbol{true, static_cast<int>(b)});
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace

FormSet expand_heads(const Grammar& g, const SForm& form) {
  FormSet out;
  expand_heads_into(g, form, out, 0);
  return out;
}

FormSet letter_quot(const Grammar& g, const SForm& form, char b) {
  FormSet out;
  for (const SForm& f : expand_heads(g, form)) {
    if (f.empty() || static_cast<char>(f[0].id) != b) continue;
    SForm tail(f.begin() + 1, f.end());
    expand_heads_into(g, tail, out, 0);
  }
  return out;
}

FormSet quot_less(const Grammar& g, const SForm& form, std::string_view w) {
  FormSet out;
  if (w.empty()) return out;  // no word is below the empty word
  const char b = w[0];
  const int rb = g.alphabet.rank(b);
  for (const SForm& f : expand_heads(g, form))
    if (f.empty() || g.alphabet.rank(static_cast<char>(f[0].id)) < rb) out.insert(f);
  for (const SForm& gamma : letter_quot(g, form, b))
    for (const SForm& r : quot_less(g, gamma, w.substr(1))) out.insert(prepend_letter(b, r));
  return out;
}

FormSet quot_geq(const Grammar& g, const SForm& form, std::string_view w) {
  if (w.empty()) return {form};
  const char b = w[0];
  FormSet out;
  for (const SForm& gamma : letter_quot(g, form, b))
    for (const SForm& r : quot_geq(g, gamma, w.substr(1))) out.insert(prepend_letter(b, r));
  if (auto c = g.alphabet.successor(b)) {
    const int rc = g.alphabet.rank(*c);
    for (const SForm& f : expand_heads(g, form))
      if (!f.empty() && g.alphabet.rank(static_cast<char>(f[0].id)) >= rc) out.insert(f);
  }
  return out;
}

FormSet left_quot(const Grammar& g, const SForm& form, std::string_view u) {
  FormSet cur{form};
  for (char b : u) cur = letter_quot(g, cur, b);
  return cur;
}

FormSet letter_quot(const Grammar& g, const FormSet& forms, char b) {
  FormSet out;
  for (const SForm& f : forms) {
    FormSet one = letter_quot(g, f, b);
    out.insert(one.begin(), one.end());
  }
  return out;
}

FormSet quot_less(const Grammar& g, const FormSet& forms, std::string_view w) {
  FormSet out;
  for (const SForm& f : forms) {
    FormSet one = quot_less(g, f, w);
    out.insert(one.begin(), one.end());
  }
  return out;
}

FormSet quot_geq(const Grammar& g, const FormSet& forms, std::string_view w) {
  FormSet out;
  for (const SForm& f : forms) {
    FormSet one = quot_geq(g, f, w);
    out.insert(one.begin(), one.end());
  }
  return out;
}

FormSet left_quot(const Grammar& g, const FormSet& forms, std::string_view u) {
  FormSet out;
  for (const SForm& f : forms) {
    FormSet one = left_quot(g, f, u);
    out.insert(one.begin(), one.end());
  }
  return out;
}

namespace {

// A total deterministic automaton with one output mark per transition.
struct Dfa {
  int initial = 0;
  std::vector<std::vector<int>> next;   // [state][letter rank]
  std::vector<std::vector<bool>> mark;  // same shape
  std::vector<bool> accepting;

  int states() const { return static_cast<int>(next.size()); }
};

// Grammar over the single letter 'a' generating, for every x in L(form)
// accepted by the automaton, the word a^(marks emitted along x).
Grammar transducer_image(const Grammar& g, const SForm& form, const Dfa& dfa) {
  // fresh start deriving the form, then bodies cut down to length <= 2
  std::vector<std::vector<SForm>> prods = g.productions;
  prods.push_back({form});
  for (std::size_t a = 0; a < prods.size(); ++a)
    for (std::size_t bi = 0; bi < prods[a].size(); ++bi)
      while (prods[a][bi].size() > 2) {
        SForm rest(prods[a][bi].begin() + 1, prods[a][bi].end());
        int fresh = static_cast<int>(prods.size());
        prods.push_back({std::move(rest)});
        prods[a][bi].resize(1);
        prods[a][bi].push_back(Symbol{false, fresh});
      }

  const int n2 = static_cast<int>(prods.size());
  const int q_count = dfa.states();
  auto pid = [&](int q, int x, int q2) { return (q * n2 + x) * q_count + q2; };
  const int super = q_count * n2 * q_count;

  Grammar img;
  img.alphabet = Alphabet("a");
  img.nonterminal_names.reserve(static_cast<std::size_t>(super) + 1);
  for (int i = 0; i < super; ++i) img.nonterminal_names.push_back("P" + std::to_string(i));
  img.nonterminal_names.push_back("S");
  img.start = super;
  img.productions.resize(static_cast<std::size_t>(super) + 1);
  const Symbol mark{true, 'a'};

  // a terminal step q -> q2 contributes its mark; a nonterminal spans (q, q2)
  auto piece = [&](int q, const Symbol& s, int q2, SForm& body) -> bool {
    if (s.terminal) {
      int r = g.alphabet.rank(static_cast<char>(s.id));
      if (dfa.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] != q2) return false;
      if (dfa.mark[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)]) body.push_back(mark);
      return true;
    }
    body.push_back(Symbol{false, pid(q, s.id, q2)});
    return true;
  };

  for (int q = 0; q < q_count; ++q)
    for (int x = 0; x < n2; ++x)
      for (int q2 = 0; q2 < q_count; ++q2) {
        auto& alts = img.productions[static_cast<std::size_t>(pid(q, x, q2))];
        std::set<SForm> seen;
        for (const SForm& body : prods[static_cast<std::size_t>(x)]) {
          if (body.empty()) {
            if (q == q2 && seen.insert(SForm{}).second) alts.push_back(SForm{});
          } else if (body.size() == 1) {
            SForm nb;
            if (piece(q, body[0], q2, nb) && seen.insert(nb).second) alts.push_back(std::move(nb));
          } else {
            for (int r = 0; r < q_count; ++r) {
              SForm nb;
              if (!piece(q, body[0], r, nb)) continue;
              if (!piece(r, body[1], q2, nb)) continue;
              if (seen.insert(nb).second) alts.push_back(std::move(nb));
            }
          }
        }
      }
  const int form_nt = static_cast<int>(g.productions.size());  // the fresh start added first
  auto& super_alts = img.productions[static_cast<std::size_t>(super)];
  for (int qf = 0; qf < q_count; ++qf)
    if (dfa.accepting[static_cast<std::size_t>(qf)])
      super_alts.push_back({Symbol{false, pid(dfa.initial, form_nt, qf)}});

  return strip_useless(img);
}

}  // namespace

EventualAvoidance eventual_avoidance(const Grammar& g, std::string_view u, std::string_view v,
                                     const SForm& form, const Limits& limits) {
  if (v.empty()) throw DomainError("avoidance period must be nonempty");
  const std::size_t k = g.alphabet.size();
  for (char c : u) g.alphabet.rank(c);
  for (char c : v) g.alphabet.rank(c);

  // Does any word of L(form) start with u at all?  If not, N = 0 avoids.
  {
    const int lu = static_cast<int>(u.size());
    const int dead = lu + 1;
    Dfa d;
    d.next.assign(static_cast<std::size_t>(lu) + 2, std::vector<int>(k, dead));
    d.mark.assign(static_cast<std::size_t>(lu) + 2, std::vector<bool>(k, false));
    d.accepting.assign(static_cast<std::size_t>(lu) + 2, false);
    for (int i = 0; i < lu; ++i)
      d.next[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.alphabet.rank(u[static_cast<std::size_t>(i)]))] = i + 1;
    for (std::size_t r = 0; r < k; ++r) d.next[static_cast<std::size_t>(lu)][r] = lu;  // absorbing accept
    d.accepting[static_cast<std::size_t>(lu)] = true;
    Grammar img = transducer_image(g, form, d);
    if (is_empty(img, FormSet{SForm{Symbol{false, img.start}}})) return {true, 0};
  }

  // Count complete copies of v after the prefix u; the image collects one 'a'
  // per copy, over every word of the language.
  const int lu = static_cast<int>(u.size());
  const int lv = static_cast<int>(v.size());
  const int dead = lu + lv;
  Dfa d;
  d.next.assign(static_cast<std::size_t>(dead) + 1, std::vector<int>(k, dead));
  d.mark.assign(static_cast<std::size_t>(dead) + 1, std::vector<bool>(k, false));
  d.accepting.assign(static_cast<std::size_t>(dead) + 1, true);
  for (int i = 0; i < lu; ++i)
    d.next[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.alphabet.rank(u[static_cast<std::size_t>(i)]))] = i + 1;
  for (int j = 0; j < lv; ++j) {
    int r = g.alphabet.rank(v[static_cast<std::size_t>(j)]);
    d.next[static_cast<std::size_t>(lu + j)][static_cast<std::size_t>(r)] = j + 1 < lv ? lu + j + 1 : lu;
    d.mark[static_cast<std::size_t>(lu + j)][static_cast<std::size_t>(r)] = j + 1 == lv;
  }
  Grammar img = transducer_image(g, form, d);
  if (!is_finite(img, img.start)) return {false, 0};
  std::size_t longest = 0;
  for (const std::string& w : finite_words(img, img.start, limits))
    longest = std::max(longest, w.size());
  return {true, longest + 1};
}

bool eventually_avoids(const Grammar& g, std::string_view u, std::string_view v,
                       const SForm& form, const Limits& limits) {
  return eventual_avoidance(g, u, v, form, limits).avoids;
}

}  // namespace ordgram
