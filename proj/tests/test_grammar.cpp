#include <doctest.h>

#include <string>
#include <vector>

#include "ordgram/errors.hpp"
#include "ordgram/grammar.hpp"
#include "support.hpp"

using namespace ordgram;

TEST_CASE("grammar parsing basics") {
  Grammar g = testsupport::load_corpus("omega.cfg");
  CHECK(g.alphabet.size() == 2);
  CHECK(g.nonterminal_count() == 1);
  CHECK(g.name_of(g.start) == "X");
  CHECK(g.productions[static_cast<std::size_t>(g.start)].size() == 2);
}

TEST_CASE("grammar parse errors") {
  CHECK_THROWS_AS(parse_grammar("start: S\nS -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("order: a\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("order: a\nstart: S\nS -> b\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("order: a\nstart: S\nS ->\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("order: a < a\nstart: S\nS -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("order: a\nstart: S\nS -> a _eps\n"), ParseError);
  CHECK_THROWS_AS(testsupport::load_corpus("malformed.cfg"), ParseError);
  try {
    testsupport::load_corpus("malformed.cfg");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("comments and accumulation") {
  Grammar g = parse_grammar(
      "# a comment\norder: b < a  # trailing\nstart: X\nX -> a X\nX -> b | b\n");
  CHECK(g.productions[0].size() == 2);
}

TEST_CASE("grammar rendering round trips") {
  for (const std::string& name : testsupport::solvable_corpus()) {
    Grammar g = testsupport::load_corpus(name);
    Grammar h = parse_grammar(render_grammar(g));
    CHECK(render_grammar(h) == render_grammar(g));
  }
}

TEST_CASE("form parsing and rendering") {
  Grammar g = testsupport::load_corpus("w2.cfg");
  SForm f = parse_form(g, "a Y b X");
  CHECK(f.size() == 4);
  CHECK(render_form(g, f) == "a Y b X");
  CHECK(parse_form(g, "_eps").empty());
  CHECK(render_form(g, {}) == "_eps");
  CHECK_THROWS_AS(parse_form(g, "a Q"), DomainError);
  CHECK_THROWS_AS(parse_form(g, "a ?"), ParseError);
}

TEST_CASE("finiteness detection") {
  Grammar inf = testsupport::load_corpus("omega.cfg");
  CHECK_FALSE(is_finite(inf, inf.start));
  Grammar fin = testsupport::load_corpus("finite.cfg");
  CHECK(is_finite(fin, fin.start));
  Grammar cyc = parse_grammar("order: a\nstart: X\nX -> X | a\n");
  CHECK(is_finite(cyc, cyc.start));
}

TEST_CASE("finite word listing") {
  Grammar g = testsupport::load_corpus("finite.cfg");
  auto words = finite_words(g, g.start);
  CHECK(words == std::vector<std::string>{"b", "ab"});
  Grammar inf = testsupport::load_corpus("omega.cfg");
  CHECK_THROWS_AS(finite_words(inf, inf.start), DomainError);
}

TEST_CASE("bounded enumeration in lexicographic order") {
  Grammar g = testsupport::load_corpus("omega.cfg");
  auto words = lex_enumerate(g, testsupport::start_set(g), 4);
  CHECK(words == std::vector<std::string>{"b", "ab", "aab", "aaab"});
  auto again = lex_enumerate(g, testsupport::start_set(g), 4);
  CHECK(again == words);
}

TEST_CASE("useless symbol removal") {
  Grammar g = parse_grammar(
      "order: b < a\nstart: S\nS -> a S | b\nT -> a T\nU -> b\n");
  Grammar s = strip_useless(g);
  CHECK(s.nonterminal_count() == 1);
  CHECK(s.name_of(s.start) == "S");
}

TEST_CASE("enumeration respects the step budget") {
  Grammar g = testsupport::load_corpus("w_omega.cfg");
  Limits tiny;
  tiny.enumeration_budget = 5;
  CHECK_THROWS_AS(lex_enumerate(g, testsupport::start_set(g), 10, tiny), BudgetExceededError);
}

TEST_CASE("emptiness of form sets") {
  Grammar g = testsupport::load_corpus("omega.cfg");
  CHECK(is_empty(g, {}));
  CHECK_FALSE(is_empty(g, testsupport::start_set(g)));
}
