#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ordgram/grammar.hpp"
#include "ordgram/ordinal.hpp"

namespace testsupport {

inline std::string corpus_path(const std::string& name) {
  return std::string(ORDGRAM_CORPUS_DIR) + "/" + name;
}

inline ordgram::Grammar load_corpus(const std::string& name) {
  return ordgram::parse_grammar_file(corpus_path(name));
}

inline ordgram::SForm start_form(const ordgram::Grammar& g) {
  return ordgram::SForm{ordgram::Symbol{false, g.start}};
}

inline ordgram::FormSet start_set(const ordgram::Grammar& g) {
  return ordgram::FormSet{start_form(g)};
}

// The grammars the pipeline must solve; the remaining corpus files exist to
// exercise diagnostics.
inline const std::vector<std::string>& solvable_corpus() {
  static const std::vector<std::string> names{
      "omega.cfg",   "omega_plus_one.cfg",   "w2.cfg",     "w2_alt.cfg",   "w3.cfg",
      "w_omega.cfg", "w_omega_plus_one.cfg", "case2.cfg",  "finite.cfg",   "eps_only.cfg"};
  return names;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd =
      std::string(ORDGRAM_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Random CNF value with exponent nesting depth <= depth and coefficients <= 9.
inline ordgram::Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  using ordgram::Ordinal;
  std::uniform_int_distribution<int> term_count(0, 3);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 9);
  std::uniform_int_distribution<std::uint64_t> finite(0, 9);
  int k = term_count(rng);
  if (depth == 0 || k == 0) return Ordinal(finite(rng));
  std::vector<Ordinal> exps;
  exps.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) exps.push_back(random_ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) {
    return cmp(b, a) == std::strong_ordering::less;
  });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> terms;
  terms.reserve(exps.size());
  for (Ordinal& e : exps) terms.push_back({std::move(e), coeff(rng)});
  return Ordinal::from_terms(std::move(terms));
}

inline std::string random_word(std::mt19937_64& rng, const ordgram::Alphabet& alphabet,
                               std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w += alphabet.letters()[pick(rng)];
  return w;
}

}  // namespace testsupport
