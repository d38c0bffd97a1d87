#include <doctest.h>

#include <string>

#include "ordgram/components.hpp"
#include "ordgram/errors.hpp"
#include "ordgram/grammar.hpp"
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

}

TEST_CASE("components of a two level grammar") {
  Prepared p = prepare("w2.cfg");
  int y = p.g.nonterminal_symbol("Y").id;
  int x = p.g.nonterminal_symbol("X").id;
  CHECK(p.comps.component[static_cast<std::size_t>(y)] !=
        p.comps.component[static_cast<std::size_t>(x)]);
  CHECK(p.comps.recursive[static_cast<std::size_t>(y)]);
  CHECK(p.comps.recursive[static_cast<std::size_t>(x)]);
  CHECK(p.comps.height[static_cast<std::size_t>(y)] > p.comps.height[static_cast<std::size_t>(x)]);
  CHECK(p.comps.u[static_cast<std::size_t>(y)] == "a");
  CHECK(p.comps.u[static_cast<std::size_t>(x)] == "a");
}

TEST_CASE("pump words of the mixed grammar") {
  Prepared p = prepare("case2.cfg");
  int x = p.g.nonterminal_symbol("X").id;
  int y = p.g.nonterminal_symbol("Y").id;
  CHECK(p.comps.u[static_cast<std::size_t>(x)] == "a");
  CHECK(p.comps.u[static_cast<std::size_t>(y)] == "a");
  CHECK(p.comps.component[static_cast<std::size_t>(x)] !=
        p.comps.component[static_cast<std::size_t>(y)]);
}

TEST_CASE("pump words only exist for recursive nonterminals") {
  Prepared p = prepare("omega_plus_one.cfg");
  int s = p.g.nonterminal_symbol("S").id;
  CHECK_FALSE(p.comps.recursive[static_cast<std::size_t>(s)]);
  CHECK(p.comps.u[static_cast<std::size_t>(s)] == "");
  CHECK_THROWS_AS(compute_u(p.g, p.comps, s), DomainError);
}

TEST_CASE("production classification") {
  Prepared p = prepare("case2.cfg");
  int x = p.g.nonterminal_symbol("X").id;
  bool saw_recursive = false, saw_escape = false;
  for (const SForm& body : p.g.productions[static_cast<std::size_t>(x)]) {
    ProductionParts parts = classify_production(p.g, p.comps, x, body);
    if (parts.component_occurrences == 1) {
      saw_recursive = true;
      CHECK(parts.clean_head);
      CHECK(parts.head_word == "a");
      CHECK(parts.partner == x);
      REQUIRE(parts.tail.size() == 1);
      CHECK(parts.tail[0].terminal);
      CHECK(static_cast<char>(parts.tail[0].id) == 'd');
    } else {
      saw_escape = true;
      CHECK(parts.component_occurrences == 0);
    }
  }
  CHECK(saw_recursive);
  CHECK(saw_escape);
}

TEST_CASE("inconsistent pump labels are rejected") {
  Grammar g = parse_grammar("order: b < a\nstart: X\nX -> a a X | a b X | b\n");
  NormalizeOutcome out = to_normal_form(g);
  REQUIRE(out.kind == NormalizeOutcome::Kind::normalized);
  ComponentTable comps = compute_components(*out.grammar);
  CHECK_THROWS_AS(compute_all_u(*out.grammar, comps), NotAnOrdinalGrammar);
  try {
    compute_all_u(*out.grammar, comps);
    FAIL("expected rejection");
  } catch (const NotAnOrdinalGrammar& e) {
    CHECK(std::string(e.what()).find("common") != std::string::npos);
  }
}

TEST_CASE("pump words rotate around a mutual cycle") {
  Grammar g = parse_grammar(
      "order: e < d < b < a\nstart: X\nX -> a Y | d\nY -> b X | e\n");
  Prepared p = prepare(g);
  int x = p.g.nonterminal_symbol("X").id;
  int y = p.g.nonterminal_symbol("Y").id;
  CHECK(p.comps.component[static_cast<std::size_t>(x)] ==
        p.comps.component[static_cast<std::size_t>(y)]);
  CHECK(p.comps.u[static_cast<std::size_t>(x)] == "ab");
  CHECK(p.comps.u[static_cast<std::size_t>(y)] == "ba");
}

TEST_CASE("terminal nodes sit at height zero") {
  Prepared p = prepare("w2.cfg");
  for (char c : p.g.alphabet.letters()) {
    int node = p.comps.node_of(p.g, p.g.terminal_symbol(c));
    CHECK(p.comps.height[static_cast<std::size_t>(node)] == 0);
  }
}
