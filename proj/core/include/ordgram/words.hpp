#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ordgram {

// A finite ordered alphabet of single-character letters.  The declared order
// (smallest first) drives every lexicographic comparison; character codes are
// irrelevant.
class Alphabet {
 public:
  Alphabet() { rank_.fill(-1); }
  // `letters` lists the alphabet from smallest to largest.  Throws
  // DomainError on duplicates or an empty sequence.
  explicit Alphabet(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }
  bool contains(char c) const { return rank_[uc(c)] >= 0; }
  // 0-based position in the declared order; throws DomainError if absent.
  int rank(char c) const;
  // Smallest letter strictly greater than c, if any.
  std::optional<char> successor(char c) const;
  std::strong_ordering cmp(char a, char b) const { return rank(a) <=> rank(b); }

 private:
  static std::size_t uc(char c) { return static_cast<unsigned char>(c); }
  std::string letters_;
  std::array<int, 256> rank_;
};

// A finite or ultimately periodic word.  An empty period denotes the finite
// word `prefix`; a nonempty period denotes prefix·period^w.  Canonical values
// (as produced by finite/periodic) have a primitive period and a prefix that
// cannot be shortened by rotating the period, so equality is structural.
struct UPWord {
  std::string prefix;
  std::string period;

  bool is_finite() const { return period.empty(); }
  static UPWord finite(std::string w) { return UPWord{std::move(w), {}}; }
  static UPWord periodic(std::string prefix, std::string period);

  friend bool operator==(const UPWord&, const UPWord&) = default;
};

// Shortest word p with w = p^k, k >= 1.  Throws DomainError on empty input.
std::string primitive_root(std::string_view w);

// First n letters of the denoted word; a finite word shorter than n is
// returned whole.
std::string finite_prefix(const UPWord& x, std::size_t n);

// Lexicographic comparison where a proper prefix is smaller and otherwise the
// first differing letter decides (by alphabet order).  Both words must be
// over `a`.
std::strong_ordering lex_cmp(std::string_view x, std::string_view y, const Alphabet& a);
std::strong_ordering lex_cmp(const UPWord& x, const UPWord& y, const Alphabet& a);

// Finite word as-is; infinite as PREFIX(PERIOD)^w, e.g. "ab(c)^w".
std::string render_word(const UPWord& x);

}  // namespace ordgram
