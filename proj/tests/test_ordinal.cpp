#include <doctest.h>

#include <random>

#include "ordgram/errors.hpp"
#include "ordgram/ordinal.hpp"
#include "support.hpp"

using namespace ordgram;

namespace {
Ordinal O(const char* text) { return parse_text(text); }
}

TEST_CASE("ordinal comparison") {
  CHECK(cmp(Ordinal(0), Ordinal(0)) == std::strong_ordering::equal);
  CHECK(cmp(Ordinal::omega(), O("w + 1")) == std::strong_ordering::less);
  CHECK(cmp(O("w^2"), O("w*5 + 3")) == std::strong_ordering::greater);
  CHECK(cmp(Ordinal(3), Ordinal(7)) == std::strong_ordering::less);
  CHECK(O("w^2 + w") == O("w^2 + w"));
}

TEST_CASE("ordinal addition") {
  CHECK(add(Ordinal(1), Ordinal::omega()) == Ordinal::omega());
  CHECK(add(Ordinal::omega(), Ordinal(1)) == O("w + 1"));
  CHECK(add(O("w*2 + 3"), O("w + 5")) == O("w*3 + 5"));
  CHECK(add(Ordinal(0), O("w^2")) == O("w^2"));
  CHECK(add(O("w^2"), Ordinal(0)) == O("w^2"));
}

TEST_CASE("ordinal multiplication") {
  CHECK(mul(Ordinal::omega(), Ordinal(0)) == Ordinal(0));
  CHECK(mul(Ordinal(0), Ordinal::omega()) == Ordinal(0));
  CHECK(mul(Ordinal::omega(), Ordinal::omega()) == O("w^2"));
  CHECK(mul(O("w^2 + 1"), Ordinal(2)) == O("w^2*2 + 1"));
  CHECK(mul(Ordinal(2), Ordinal::omega()) == Ordinal::omega());
  CHECK(mul(O("w + 1"), O("w")) == O("w^2"));
}

TEST_CASE("natural powers") {
  CHECK(pow_nat(Ordinal::omega(), 0) == Ordinal(1));
  CHECK(pow_nat(Ordinal::omega(), 3) == O("w^3"));
  CHECK(pow_nat(Ordinal(2), 5) == Ordinal(32));
}

TEST_CASE("omega powers") {
  CHECK(omega_pow(Ordinal(0)) == Ordinal(1));
  CHECK(omega_pow(Ordinal(1)) == Ordinal::omega());
  CHECK(omega_pow(Ordinal::omega()) == O("w^(w)"));

  CHECK(pow_omega(Ordinal(0)) == Ordinal(0));
  CHECK(pow_omega(Ordinal(1)) == Ordinal(1));
  CHECK(pow_omega(Ordinal(2)) == Ordinal::omega());
  CHECK(pow_omega(Ordinal::omega()) == O("w^(w)"));
  CHECK(pow_omega(O("w^2*3 + w")) == O("w^(w)"));
}

TEST_CASE("degree") {
  CHECK(degree(Ordinal(5)) == Ordinal(0));
  CHECK(degree(O("w^2*3 + w")) == Ordinal(2));
  CHECK(degree(O("w^(w)")) == Ordinal::omega());
  CHECK_THROWS_AS(degree(Ordinal(0)), DomainError);
}

TEST_CASE("omega power recognition") {
  CHECK(is_omega_power(Ordinal(1)));
  CHECK(is_omega_power(O("w^2")));
  CHECK_FALSE(is_omega_power(O("w*2")));
  CHECK_FALSE(is_omega_power(O("w + 1")));
  CHECK_THROWS_AS(is_omega_power(Ordinal(0)), DomainError);
}

TEST_CASE("algebraic range check") {
  CHECK(is_algebraic(Ordinal(0)));
  CHECK(is_algebraic(O("w^(w^2*3 + 4)")));
  CHECK_FALSE(is_algebraic(omega_pow(omega_pow(Ordinal::omega()))));
}

TEST_CASE("text rendering") {
  CHECK(to_text(Ordinal(0)) == "0");
  CHECK(to_text(O("w^2*3 + 5")) == "w^2*3 + 5");
  CHECK(to_text(omega_pow(O("w + 1"))) == "w^(w + 1)");
  CHECK(to_text(Ordinal::omega()) == "w");
  CHECK(to_text(O("w^3 + w^2*2 + w + 7")) == "w^3 + w^2*2 + w + 7");
}

TEST_CASE("text parsing rejects non-canonical input") {
  CHECK_THROWS_AS(parse_text(""), ParseError);
  CHECK_THROWS_AS(parse_text("w^1"), ParseError);
  CHECK_THROWS_AS(parse_text("w^0"), ParseError);
  CHECK_THROWS_AS(parse_text("w*1"), ParseError);
  CHECK_THROWS_AS(parse_text("w*0"), ParseError);
  CHECK_THROWS_AS(parse_text("w^(2)"), ParseError);
  CHECK_THROWS_AS(parse_text("1 + w"), ParseError);
  CHECK_THROWS_AS(parse_text("w + w"), ParseError);
  CHECK_THROWS_AS(parse_text("0 + 1"), ParseError);
  CHECK_THROWS_AS(parse_text("00"), ParseError);
  CHECK_THROWS_AS(parse_text("w*"), ParseError);
  CHECK_THROWS_AS(parse_text("w 1"), ParseError);
  CHECK_THROWS_AS(parse_text("w^"), ParseError);
  CHECK_THROWS_AS(parse_text("18446744073709551616"), ParseError);
}

TEST_CASE("term validation") {
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal(0), 1}, {Ordinal(1), 1}}), DomainError);
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal(1), 0}}), DomainError);
  CHECK(Ordinal::from_terms({{Ordinal(1), 2}, {Ordinal(0), 3}}) == O("w*2 + 3"));
}

TEST_CASE("coefficient overflow is detected") {
  const Ordinal big = parse_text("w*18446744073709551615");
  CHECK_THROWS_AS(add(big, O("w*2")), OverflowError);
  CHECK_THROWS_AS(mul(big, Ordinal(3)), OverflowError);
}

TEST_CASE("arithmetic properties on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = testsupport::random_ordinal(rng, 2);
    Ordinal b = testsupport::random_ordinal(rng, 2);
    Ordinal c = testsupport::random_ordinal(rng, 2);
    REQUIRE(add(add(a, b), c) == add(a, add(b, c)));
    REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
    REQUIRE(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    if (!a.is_zero() && !b.is_zero()) {
      Ordinal da = degree(a), db = degree(b);
      REQUIRE(degree(add(a, b)) == (cmp(da, db) == std::strong_ordering::less ? db : da));
      REQUIRE(degree(mul(a, b)) == add(da, db));
      if (cmp(da, db) == std::strong_ordering::less && b.terms().size() == 1)
        REQUIRE(add(a, b) == b);
    }
    if (!b.is_zero()) REQUIRE(cmp(a, add(a, b)) == std::strong_ordering::less);
    if (!a.is_zero()) REQUIRE(is_omega_power(pow_omega(a)));
    REQUIRE(parse_text(to_text(a)) == a);
  }
}
