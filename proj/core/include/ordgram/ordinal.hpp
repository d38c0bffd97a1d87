#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ordgram {

// An ordinal in Cantor normal form: a finite sum w^e1*c1 + ... + w^ek*ck with
// exponents e1 > e2 > ... > ek (themselves ordinals) and coefficients ci >= 1.
// The empty sum is 0.  Values are immutable; operations return new values.
// Coefficient arithmetic is checked and raises OverflowError on wraparound.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;                 // zero
  explicit Ordinal(std::uint64_t n);   // the finite ordinal n
  static Ordinal omega();
  // Validates the CNF shape (positive coefficients, strictly decreasing
  // exponents) and throws DomainError otherwise.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  std::uint64_t finite_value() const;  // requires is_finite()
  const std::vector<Term>& terms() const { return terms_; }

 private:
  struct unchecked {};
  Ordinal(std::vector<Term> terms, unchecked) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;

  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal mul(const Ordinal&, const Ordinal&);
  friend Ordinal omega_pow(const Ordinal&);
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

// Total order on ordinals.
std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cmp(a, b); }

// Ordinal sum a + b (left argument absorbs into the right one as usual:
// terms of `a` below deg(b) vanish).
Ordinal add(const Ordinal& a, const Ordinal& b);
// Ordinal product a * b.
Ordinal mul(const Ordinal& a, const Ordinal& b);
// a^n for a natural number n (a^0 = 1).
Ordinal pow_nat(const Ordinal& a, std::uint64_t n);
// w^e.
Ordinal omega_pow(const Ordinal& e);
// a^w: 0^w = 0, 1^w = 1, n^w = w for finite n >= 2, and a^w = w^(deg(a)*w)
// for a >= w.
Ordinal pow_omega(const Ordinal& a);
// Leading exponent of a nonzero ordinal; throws DomainError on 0.
Ordinal degree(const Ordinal& a);
// True iff a = w^e for some e (note 1 = w^0); throws DomainError on 0.
bool is_omega_power(const Ordinal& a);
// True iff a < w^(w^w), i.e. the exponent of every exponent is finite.
bool is_algebraic(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

// Canonical text form: "0"; terms joined by " + " in strictly decreasing
// exponent order; an exponent-0 term prints as its bare decimal coefficient;
// otherwise the base prints as "w" (exponent 1), "w^k" (finite k >= 2) or
// "w^(E)" (infinite exponent), and a coefficient >= 2 appends "*c".
std::string to_text(const Ordinal& a);
// Inverse of to_text.  Rejects non-canonical input (zero coefficients,
// non-decreasing exponents, "w^1", "w*1", parenthesized finite exponents).
Ordinal parse_text(std::string_view text);

}  // namespace ordgram
