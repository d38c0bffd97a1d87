#include "ordgram/words.hpp"

#include <algorithm>
#include <vector>

#include "ordgram/errors.hpp"

namespace ordgram {

Alphabet::Alphabet(std::string_view letters) {
  rank_.fill(-1);
  if (letters.empty()) throw DomainError("alphabet must not be empty");
  for (char c : letters) {
    if (rank_[uc(c)] >= 0) throw DomainError(std::string("duplicate letter '") + c + "' in alphabet");
    rank_[uc(c)] = static_cast<int>(letters_.size());
    letters_ += c;
  }
}

int Alphabet::rank(char c) const {
  int r = rank_[uc(c)];
  if (r < 0) throw DomainError(std::string("letter '") + c + "' is not in the alphabet");
  return r;
}

std::optional<char> Alphabet::successor(char c) const {
  std::size_t r = static_cast<std::size_t>(rank(c));
  if (r + 1 >= letters_.size()) return std::nullopt;
  return letters_[r + 1];
}

UPWord UPWord::periodic(std::string prefix, std::string period) {
  if (period.empty()) return finite(std::move(prefix));
  period = primitive_root(period);
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    period.insert(period.begin(), period.back());
    period.pop_back();
  }
  return UPWord{std::move(prefix), std::move(period)};
}

std::string primitive_root(std::string_view w) {
  if (w.empty()) throw DomainError("primitive root of the empty word");
  std::vector<std::size_t> fail(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  std::size_t p = w.size() - fail.back();
  if (w.size() % p == 0) return std::string(w.substr(0, p));
  return std::string(w);
}

namespace {

// Rank of the letter at position i, or -1 past the end of a finite word.
int rank_at(const UPWord& x, std::size_t i, const Alphabet& a) {
  if (i < x.prefix.size()) return a.rank(x.prefix[i]);
  if (x.period.empty()) return -1;
  return a.rank(x.period[(i - x.prefix.size()) % x.period.size()]);
}

}  // namespace

std::string finite_prefix(const UPWord& x, std::size_t n) {
  if (x.is_finite()) return x.prefix.substr(0, std::min(n, x.prefix.size()));
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < x.prefix.size())
      out += x.prefix[i];
    else
      out += x.period[(i - x.prefix.size()) % x.period.size()];
  }
  return out;
}

std::strong_ordering lex_cmp(std::string_view x, std::string_view y, const Alphabet& a) {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.cmp(x[i], y[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering lex_cmp(const UPWord& x, const UPWord& y, const Alphabet& a) {
  // Any difference between two ultimately periodic words shows up within
  // |px| + |py| + |ux|*|uy| positions.
  std::size_t bound = x.prefix.size() + y.prefix.size() +
                      std::max<std::size_t>(1, x.period.size()) *
                          std::max<std::size_t>(1, y.period.size());
  for (std::size_t i = 0; i <= bound; ++i) {
    int rx = rank_at(x, i, a);
    int ry = rank_at(y, i, a);
    if (rx != ry) return rx <=> ry;
    if (rx < 0) break;  // both ended
  }
  return std::strong_ordering::equal;
}

std::string render_word(const UPWord& x) {
  if (x.is_finite()) return x.prefix;
  return x.prefix + "(" + x.period + ")^w";
}

}  // namespace ordgram
