#include "ordgram/oracle.hpp"

#include <algorithm>

#include "ordgram/components.hpp"
#include "ordgram/errors.hpp"
#include "ordgram/normalize.hpp"
#include "ordgram/words.hpp"

namespace ordgram {

namespace {

bool proper_prefix(const std::string& x, const std::string& y) {
  return x.size() < y.size() && y.compare(0, x.size(), x) == 0;
}

std::string quoted(const std::string& w) { return "\"" + w + "\""; }

// Flags x > y > z chains of the shape x = P s, y = P q s, z = P q q s: one
// more copy of q keeps decreasing, so the enumeration suggests an infinite
// descending chain P q^n s.
void pumped_descent(const Grammar& g, const std::vector<std::string>& words,
                    std::vector<Finding>& out) {
  std::set<std::string> in_language(words.begin(), words.end());
  for (const std::string& x : words)
    for (const std::string& y : words) {
      if (lex_cmp(y, x, g.alphabet) != std::strong_ordering::less) continue;
      const std::size_t shared = std::min(x.size(), y.size());
      for (std::size_t p = 0; p <= shared; ++p) {
        if (p > 0 && x[p - 1] != y[p - 1]) break;
        const std::string s = x.substr(p);
        if (y.size() < p + s.size()) continue;
        const std::string q = y.substr(p, y.size() - p - s.size());
        if (q.empty() || y.compare(y.size() - s.size(), s.size(), s) != 0) continue;
        const std::string z = x.substr(0, p) + q + q + s;
        if (!in_language.count(z)) continue;
        if (lex_cmp(z, y, g.alphabet) != std::strong_ordering::less) continue;
        out.push_back({"descending-chain",
                       quoted(x) + " > " + quoted(y) + " > " + quoted(z) + " (pumped)"});
        return;
      }
    }
}

}  // namespace

ValidateReport validate(const Grammar& g, std::size_t max_len, const Limits& limits) {
  ValidateReport rep;

  for (int x = 0; x < static_cast<int>(g.nonterminal_count()); ++x) {
    FormSet start_form{SForm{Symbol{false, x}}};
    std::vector<std::string> words = lex_enumerate(g, start_form, max_len, limits);
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
      if (proper_prefix(words[i], words[i + 1]))
        rep.findings.push_back({"prefix-violation", g.name_of(x) + ": " + quoted(words[i]) +
                                                        " is a prefix of " +
                                                        quoted(words[i + 1])});
  }

  FormSet start_form{SForm{Symbol{false, g.start}}};
  std::vector<std::string> words = lex_enumerate(g, start_form, max_len, limits);
  pumped_descent(g, words, rep.findings);

  if (max_len > 0 && !words.empty() && !is_finite(g, g.start)) {
    std::vector<std::string> shorter;
    for (const std::string& w : words)
      if (w.size() < max_len) shorter.push_back(w);
    if (!shorter.empty() &&
        lex_cmp(words.front(), shorter.front(), g.alphabet) == std::strong_ordering::less)
      rep.findings.push_back(
          {"descending-chain", "least enumerated word still decreasing at length " +
                                   std::to_string(max_len) + ": " + quoted(words.front()) +
                                   " < " + quoted(shorter.front())});
  }

  try {
    NormalizeOutcome outcome = to_normal_form(g, limits);
    if (outcome.finite_language()) {
      rep.finite_count = outcome.words.size();
    } else {
      const Grammar& nf = *outcome.grammar;
      ComponentTable comps = compute_components(nf);
      compute_all_u(nf, comps);
      for (int x = 0; x < static_cast<int>(nf.nonterminal_count()); ++x) {
        if (!comps.recursive[static_cast<std::size_t>(x)]) continue;
        const UPWord bound = UPWord::periodic("", comps.u[static_cast<std::size_t>(x)]);
        FormSet nt_form{SForm{Symbol{false, x}}};
        for (const std::string& w : lex_enumerate(nf, nt_form, max_len, limits))
          if (lex_cmp(UPWord::finite(w), bound, nf.alphabet) != std::strong_ordering::less)
            rep.findings.push_back({"u-bound-violation",
                                    nf.name_of(x) + ": " + quoted(w) + " is not below " +
                                        render_word(bound)});
      }
    }
  } catch (const LeftRecursionError& e) {
    rep.findings.push_back({"left-recursion", e.what()});
  } catch (const ShapeViolationError& e) {
    rep.findings.push_back({"shape-violation", e.what()});
  } catch (const NotAnOrdinalGrammar& e) {
    rep.findings.push_back({"not-ordinal-grammar", e.what()});
  }

  return rep;
}

bool rank_check(const Grammar& g, const Ordinal& claimed,
                const std::function<Ordinal(const std::string&)>& rank, std::size_t max_len,
                const Limits& limits) {
  FormSet start_form{SForm{Symbol{false, g.start}}};
  Ordinal prev;
  bool have_prev = false;
  for (const std::string& w : lex_enumerate(g, start_form, max_len, limits)) {
    Ordinal r = rank(w);
    if (cmp(r, claimed) != std::strong_ordering::less) return false;
    if (have_prev && cmp(prev, r) != std::strong_ordering::less) return false;
    prev = std::move(r);
    have_prev = true;
  }
  return true;
}

}  // namespace ordgram
