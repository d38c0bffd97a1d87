#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordgram/components.hpp"
#include "ordgram/errors.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/langops.hpp"
#include "ordgram/normalize.hpp"
#include "support.hpp"

using namespace ordgram;

namespace {

struct Prepared {
  Grammar g;
  ComponentTable comps;
};

Prepared prepare(const Grammar& raw) {
  NormalizeOutcome out = to_normal_form(raw);
  REQUIRE(out.kind == NormalizeOutcome::Kind::normalized);
  Prepared p{*out.grammar, {}};
  p.comps = compute_components(p.g);
  compute_all_u(p.g, p.comps);
  return p;
}

Prepared prepare(const char* name) { return prepare(testsupport::load_corpus(name)); }

std::set<std::string> rendered(const Grammar& g, const FormSet& forms) {
  std::set<std::string> out;
  for (const SForm& f : forms) out.insert(render_form(g, f));
  return out;
}

}

TEST_CASE("suprema of simple forms") {
  Prepared p = prepare("omega.cfg");
  SupInfo whole = sup(p.g, p.comps, testsupport::start_form(p.g));
  CHECK(whole.value == UPWord::periodic("", "a"));
  CHECK_FALSE(whole.attained);

  SupInfo word = sup(p.g, p.comps, parse_form(p.g, "a b"));
  CHECK(word.value == UPWord::finite("ab"));
  CHECK(word.attained);

  SupInfo shifted = sup(p.g, p.comps, parse_form(p.g, "b X"));
  CHECK(shifted.value == UPWord::periodic("b", "a"));
  CHECK_FALSE(shifted.attained);
}

TEST_CASE("supremum of a nonrecursive start is the best alternative") {
  Prepared p = prepare("omega_plus_one.cfg");
  SupInfo s = sup(p.g, p.comps, testsupport::start_form(p.g));
  CHECK(s.value == UPWord::finite("c"));
  CHECK(s.attained);
}

TEST_CASE("the supremum dominates every enumerated word") {
  for (const std::string& name : testsupport::solvable_corpus()) {
    Grammar raw = testsupport::load_corpus(name);
    NormalizeOutcome out = to_normal_form(raw);
    if (out.kind == NormalizeOutcome::Kind::finite) continue;
    Prepared p = prepare(raw);
    SupInfo s = sup(p.g, p.comps, testsupport::start_form(p.g));
    for (const std::string& w : lex_enumerate(p.g, testsupport::start_set(p.g), 12))
      CHECK(lex_cmp(UPWord::finite(w), s.value, p.g.alphabet) != std::strong_ordering::greater);
  }
}

TEST_CASE("head expansion exposes terminal heads") {
  Prepared p = prepare("omega.cfg");
  FormSet heads = expand_heads(p.g, testsupport::start_form(p.g));
  CHECK(rendered(p.g, heads) == std::set<std::string>{"a X", "b"});
  FormSet already = expand_heads(p.g, parse_form(p.g, "b X"));
  CHECK(rendered(p.g, already) == std::set<std::string>{"b X"});
  FormSet empty = expand_heads(p.g, SForm{});
  CHECK(rendered(p.g, empty) == std::set<std::string>{"_eps"});
}

TEST_CASE("single letter quotients") {
  Prepared p = prepare("omega.cfg");
  FormSet q = letter_quot(p.g, parse_form(p.g, "a X"), 'a');
  CHECK(rendered(p.g, q) == std::set<std::string>{"a X", "b"});

  FormSet none = letter_quot(p.g, parse_form(p.g, "b"), 'a');
  CHECK(none.empty());

  FormSet through = letter_quot(p.g, testsupport::start_form(p.g), 'b');
  CHECK(rendered(p.g, through) == std::set<std::string>{"_eps"});
}

TEST_CASE("strict lower quotients keep exactly the smaller words") {
  Grammar single = parse_grammar("order: a < b\nstart: S\nS -> b\n");
  CHECK(quot_less(single, testsupport::start_form(single), "a").empty());

  Prepared p = prepare("omega.cfg");
  FormSet lt = quot_less(p.g, testsupport::start_form(p.g), "aab");
  CHECK(lex_enumerate(p.g, lt, 12) == std::vector<std::string>{"b", "ab"});
  CHECK(quot_less(p.g, testsupport::start_form(p.g), "").empty());
}

TEST_CASE("lower and upper quotients split the language") {
  Prepared p = prepare("omega.cfg");
  FormSet ge = quot_geq(p.g, testsupport::start_form(p.g), "ab");
  auto words = lex_enumerate(p.g, ge, 6);
  CHECK(words == std::vector<std::string>{"ab", "aab", "aaab", "aaaab", "aaaaab"});
}

TEST_CASE("quotients agree with filtered enumeration") {
  std::mt19937_64 rng(11);
  const std::size_t k = 7;
  for (const std::string& name : testsupport::solvable_corpus()) {
    Grammar raw = testsupport::load_corpus(name);
    NormalizeOutcome out = to_normal_form(raw);
    if (out.kind == NormalizeOutcome::Kind::finite) continue;
    const Grammar& g = *out.grammar;
    auto base = lex_enumerate(g, testsupport::start_set(g), k);
    for (int trial = 0; trial < 8; ++trial) {
      std::string u = testsupport::random_word(rng, g.alphabet, 4);

      std::vector<std::string> ge_expect, lt_expect;
      for (const std::string& w : base)
        (lex_cmp(w, u, g.alphabet) == std::strong_ordering::less ? lt_expect : ge_expect)
            .push_back(w);
      CHECK(lex_enumerate(g, quot_geq(g, testsupport::start_set(g), u), k) == ge_expect);
      CHECK(lex_enumerate(g, quot_less(g, testsupport::start_set(g), u), k) == lt_expect);

      std::vector<std::string> quot_expect;
      for (const std::string& w : lex_enumerate(g, testsupport::start_set(g), k + u.size()))
        if (w.size() >= u.size() && w.compare(0, u.size(), u) == 0 &&
            w.size() - u.size() <= k)
          quot_expect.push_back(w.substr(u.size()));
      CHECK(lex_enumerate(g, left_quot(g, testsupport::start_set(g), u), k) == quot_expect);
    }
  }
}

TEST_CASE("eventual avoidance of a pumped prefix") {
  Grammar anb = parse_grammar("order: b < a\nstart: X\nX -> a X | b\n");

  EventualAvoidance r1 = eventual_avoidance(anb, "", "a", testsupport::start_form(anb));
  CHECK_FALSE(r1.avoids);
  CHECK_FALSE(eventually_avoids(anb, "", "a", testsupport::start_form(anb)));

  Grammar word = parse_grammar("order: b < a\nstart: X\nX -> a a b\n");
  EventualAvoidance r2 = eventual_avoidance(word, "", "a", testsupport::start_form(word));
  CHECK(r2.avoids);
  CHECK(r2.threshold == 3);

  EventualAvoidance r3 = eventual_avoidance(anb, "b", "a", testsupport::start_form(anb));
  CHECK(r3.avoids);
  CHECK(r3.threshold == 1);

  EventualAvoidance r4 = eventual_avoidance(anb, "bb", "a", testsupport::start_form(anb));
  CHECK(r4.avoids);
  CHECK(r4.threshold == 0);

  CHECK_THROWS_AS(eventual_avoidance(anb, "a", "", testsupport::start_form(anb)), DomainError);
  CHECK_THROWS_AS(eventual_avoidance(anb, "c", "a", testsupport::start_form(anb)), DomainError);
}

TEST_CASE("avoidance thresholds are sharp under brute force") {
  Grammar anb = parse_grammar("order: b < a\nstart: X\nX -> a X | b\n");
  EventualAvoidance r = eventual_avoidance(anb, "b", "a", testsupport::start_form(anb));
  REQUIRE(r.avoids);
  REQUIRE(r.threshold >= 1);
  auto words = lex_enumerate(anb, testsupport::start_set(anb), 14);
  for (std::size_t n = r.threshold; n < r.threshold + 3; ++n) {
    std::string probe = "b" + std::string(n, 'a');
    for (const std::string& w : words) {
      bool extends = w.size() >= probe.size() && w.compare(0, probe.size(), probe) == 0;
      CHECK_FALSE(extends);
    }
  }
  std::string below = "b" + std::string(r.threshold - 1, 'a');
  bool hit = false;
  for (const std::string& w : words)
    if (w.size() >= below.size() && w.compare(0, below.size(), below) == 0) hit = true;
  CHECK(hit);
}
