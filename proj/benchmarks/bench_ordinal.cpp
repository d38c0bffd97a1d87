#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ordgram/ordinal.hpp"

using namespace ordgram;

namespace {

Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> term_count(0, 3);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 9);
  std::uniform_int_distribution<std::uint64_t> finite(0, 9);
  int k = term_count(rng);
  if (depth == 0 || k == 0) return Ordinal(finite(rng));
  std::vector<Ordinal> exps;
  for (int i = 0; i < k; ++i) exps.push_back(random_ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(),
            [](const Ordinal& a, const Ordinal& b) { return cmp(b, a) == std::strong_ordering::less; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> terms;
  terms.reserve(exps.size());
  for (Ordinal& e : exps) terms.push_back({std::move(e), coeff(rng)});
  return Ordinal::from_terms(std::move(terms));
}

std::vector<std::pair<Ordinal, Ordinal>> sample_pairs(std::size_t n) {
  std::mt19937_64 rng(20240817);
  std::vector<std::pair<Ordinal, Ordinal>> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pairs.emplace_back(random_ordinal(rng, 2), random_ordinal(rng, 2));
  return pairs;
}

void BM_ordinal_add(benchmark::State& state) {
  auto pairs = sample_pairs(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(add(a, b));
  }
}
BENCHMARK(BM_ordinal_add);

void BM_ordinal_mul(benchmark::State& state) {
  auto pairs = sample_pairs(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_ordinal_mul);

void BM_ordinal_cmp(benchmark::State& state) {
  auto pairs = sample_pairs(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(cmp(a, b));
  }
}
BENCHMARK(BM_ordinal_cmp);

void BM_ordinal_round_trip(benchmark::State& state) {
  auto pairs = sample_pairs(128);
  std::vector<std::string> texts;
  texts.reserve(pairs.size());
  for (const auto& [a, b] : pairs) texts.push_back(to_text(mul(add(a, b), b)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_text(texts[i++ % texts.size()]));
  }
}
BENCHMARK(BM_ordinal_round_trip);

}  // namespace
