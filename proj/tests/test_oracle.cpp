#include <doctest.h>

#include <algorithm>
#include <string>

#include "ordgram/errors.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/oracle.hpp"
#include "ordgram/ordinal.hpp"
#include "support.hpp"

using namespace ordgram;

namespace {

bool has_kind(const ValidateReport& rep, const std::string& kind) {
  return std::any_of(rep.findings.begin(), rep.findings.end(),
                     [&](const Finding& f) { return f.kind == kind; });
}

}

TEST_CASE("validation passes every corpus grammar") {
  for (const std::string& name : testsupport::solvable_corpus()) {
    CAPTURE(name);
    ValidateReport rep = validate(testsupport::load_corpus(name), 8);
    CHECK(rep.clean());
  }
}

TEST_CASE("prefix violations are caught") {
  ValidateReport rep = validate(testsupport::load_corpus("prefix_violation.cfg"), 8);
  CHECK_FALSE(rep.clean());
  CHECK(has_kind(rep, "prefix-violation"));
  ValidateReport shallow = validate(testsupport::load_corpus("prefix_violation.cfg"), 4);
  CHECK(has_kind(shallow, "prefix-violation"));
}

TEST_CASE("prefix checks cover nested nonterminals") {
  Grammar g = parse_grammar(
      "order: b < a\nstart: S\nS -> a X | b\nX -> a X | b | b b\n");
  ValidateReport rep = validate(g, 8);
  CHECK(has_kind(rep, "prefix-violation"));
  bool names_x = std::any_of(rep.findings.begin(), rep.findings.end(), [](const Finding& f) {
    return f.kind == "prefix-violation" && f.detail.rfind("X:", 0) == 0;
  });
  CHECK(names_x);
}

TEST_CASE("descending chains and pump bounds are caught") {
  ValidateReport rep = validate(testsupport::load_corpus("notwell.cfg"), 8);
  CHECK_FALSE(rep.clean());
  CHECK(has_kind(rep, "descending-chain"));
  CHECK(has_kind(rep, "u-bound-violation"));
}

TEST_CASE("normalization diagnoses become findings") {
  ValidateReport lr = validate(testsupport::load_corpus("leftrec.cfg"), 8);
  CHECK(has_kind(lr, "left-recursion"));

  Grammar two = parse_grammar("order: c < b < a\nstart: X\nX -> a X b X | c\n");
  ValidateReport shape = validate(two, 8);
  CHECK(has_kind(shape, "shape-violation"));

  Grammar mixed = parse_grammar("order: b < a\nstart: X\nX -> a a X | a b X | b\n");
  ValidateReport labels = validate(mixed, 8);
  CHECK(has_kind(labels, "not-ordinal-grammar"));
}

TEST_CASE("finite languages are counted exactly") {
  ValidateReport rep = validate(testsupport::load_corpus("finite.cfg"), 8);
  CHECK(rep.clean());
  REQUIRE(rep.finite_count.has_value());
  CHECK(*rep.finite_count == 2);

  ValidateReport eps = validate(testsupport::load_corpus("eps_only.cfg"), 8);
  CHECK(eps.clean());
  REQUIRE(eps.finite_count.has_value());
  CHECK(*eps.finite_count == 1);

  ValidateReport inf = validate(testsupport::load_corpus("omega.cfg"), 8);
  CHECK_FALSE(inf.finite_count.has_value());
}

TEST_CASE("rank witnesses certify an order type bound") {
  Grammar w2 = testsupport::load_corpus("w2.cfg");
  auto rank = [](const std::string& w) {
    std::size_t first = w.find('b');
    std::size_t second = w.find('b', first + 1);
    std::uint64_t n = first;
    std::uint64_t m = second - first - 1;
    return add(mul(Ordinal::omega(), Ordinal(n)), Ordinal(m));
  };
  CHECK(rank_check(w2, parse_text("w^2"), rank, 8));
  CHECK_FALSE(rank_check(w2, Ordinal::omega(), rank, 8));
  auto flat = [](const std::string&) { return Ordinal(0); };
  CHECK_FALSE(rank_check(w2, parse_text("w^2"), flat, 8));

  Grammar fin = testsupport::load_corpus("finite.cfg");
  auto index = [](const std::string& w) { return Ordinal(w == "b" ? 0 : 1); };
  CHECK(rank_check(fin, Ordinal(2), index, 8));
}
