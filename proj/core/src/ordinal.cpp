#include "ordgram/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "ordgram/errors.hpp"

namespace ordgram {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in ordinal addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in ordinal multiplication");
  return r;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() {
  Ordinal w;
  w.terms_.push_back(Term{Ordinal(1), 1});
  return w;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw DomainError("zero coefficient in ordinal term");
    if (i > 0 && cmp(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
      throw DomainError("ordinal exponents must be strictly decreasing");
  }
  return Ordinal(std::move(terms), unchecked{});
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) throw DomainError("finite_value of an infinite ordinal");
  return terms_[0].coefficient;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(ta[i].exponent, tb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient <=> tb[i].coefficient;
  }
  return ta.size() <=> tb.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return cmp(a, b) == std::strong_ordering::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal d = degree(b);
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  bool merged = false;
  for (; i < a.terms_.size(); ++i) {
    auto c = cmp(a.terms_[i].exponent, d);
    if (c == std::strong_ordering::greater) {
      out.push_back(a.terms_[i]);
      continue;
    }
    if (c == std::strong_ordering::equal) {
      out.push_back(Ordinal::Term{d, checked_add(a.terms_[i].coefficient, b.terms_[0].coefficient)});
      merged = true;
    }
    break;  // anything at or below deg(b) is absorbed
  }
  std::size_t from = merged ? 1 : 0;
  out.insert(out.end(), b.terms_.begin() + from, b.terms_.end());
  return Ordinal(std::move(out), Ordinal::unchecked{});
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal da = degree(a);
  std::vector<Ordinal::Term> out;
  for (const auto& t : b.terms_) {
    if (!t.exponent.is_zero()) {
      out.push_back(Ordinal::Term{add(da, t.exponent), t.coefficient});
    } else {
      // finite last term of b: it multiplies a's leading coefficient, and
      // a's remaining terms trail behind
      out.push_back(Ordinal::Term{da, checked_mul(a.terms_[0].coefficient, t.coefficient)});
      out.insert(out.end(), a.terms_.begin() + 1, a.terms_.end());
    }
  }
  return Ordinal(std::move(out), Ordinal::unchecked{});
}

Ordinal pow_nat(const Ordinal& a, std::uint64_t n) {
  Ordinal result(1);
  Ordinal base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Ordinal omega_pow(const Ordinal& e) {
  Ordinal r;
  r.terms_.push_back(Ordinal::Term{e, 1});
  return r;
}

Ordinal pow_omega(const Ordinal& a) {
  if (a.is_zero()) return Ordinal();
  if (a.is_finite()) return a.finite_value() == 1 ? Ordinal(1) : Ordinal::omega();
  return omega_pow(mul(degree(a), Ordinal::omega()));
}

Ordinal degree(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("degree of 0 is undefined");
  return a.terms().front().exponent;
}

bool is_omega_power(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("is_omega_power of 0 is undefined");
  return a.terms().size() == 1 && a.terms()[0].coefficient == 1;
}

bool is_algebraic(const Ordinal& a) {
  for (const auto& t : a.terms())
    for (const auto& s : t.exponent.terms())
      if (!s.exponent.is_finite()) return false;
  return true;
}

namespace {

void render(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal(1))) {
      out += '^';
      if (t.exponent.is_finite()) {
        out += std::to_string(t.exponent.finite_value());
      } else {
        out += '(';
        render(t.exponent, out);
        out += ')';
      }
    }
    if (t.coefficient >= 2) {
      out += '*';
      out += std::to_string(t.coefficient);
    }
  }
}

class OrdinalTextParser {
 public:
  explicit OrdinalTextParser(std::string_view s) : s_(s) {}

  Ordinal parse() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != s_.size()) fail("0 cannot be part of a larger expression", pos_);
      return Ordinal();
    }
    Ordinal v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input", pos_);
    return v;
  }

 private:
  Ordinal expr() {
    std::vector<Ordinal::Term> terms;
    std::vector<std::size_t> where;
    for (;;) {
      skip_ws();
      where.push_back(pos_);
      terms.push_back(term());
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
    }
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (cmp(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
        fail("exponents must strictly decrease", where[i]);
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t at = pos_;
      std::uint64_t n = number();
      if (n == 0) fail("zero coefficient", at);
      return Ordinal::Term{Ordinal(), n};
    }
    if (peek() != 'w') fail("expected a term", pos_);
    ++pos_;
    Ordinal exponent(1);
    if (peek() == '^') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t at = pos_;
        std::uint64_t k = number();
        if (k < 2) fail("finite exponent below 2 is not canonical", at);
        exponent = Ordinal(k);
      } else if (peek() == '(') {
        ++pos_;
        std::size_t at = pos_;
        exponent = expr();
        skip_ws();
        if (peek() != ')') fail("expected ')'", pos_);
        ++pos_;
        if (exponent.is_finite()) fail("parenthesized exponent must be infinite", at);
      } else {
        fail("expected an exponent", pos_);
      }
    }
    std::uint64_t coefficient = 1;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient", pos_);
      coefficient = number();
      if (coefficient < 2) fail("coefficient below 2 is not canonical", at);
    }
    return Ordinal::Term{std::move(exponent), coefficient};
  }

  std::uint64_t number() {
    std::size_t at = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned d = static_cast<unsigned>(peek() - '0');
      if (__builtin_mul_overflow(v, 10u, &v) || __builtin_add_overflow(v, std::uint64_t(d), &v))
        fail("number does not fit in 64 bits", at);
      ++pos_;
    }
    if (peek(at) == '0' && pos_ > at + 1) fail("leading zero", at);
    return v;
  }

  char peek(std::size_t at) const { return at < s_.size() ? s_[at] : '\0'; }
  char peek() const { return peek(pos_); }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, 0, at + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Ordinal& a) {
  std::string out;
  render(a, out);
  return out;
}

Ordinal parse_text(std::string_view text) {
  return OrdinalTextParser(text).parse();
}

}  // namespace ordgram
