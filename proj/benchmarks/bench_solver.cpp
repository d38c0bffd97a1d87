#include <benchmark/benchmark.h>

#include <string_view>

#include "ordgram/normalize.hpp"
#include "ordgram/solver.hpp"

using namespace ordgram;

namespace {

constexpr std::string_view w3_text =
    "order: b < a\n"
    "start: Z\n"
    "Z -> a Z | b Y\n"
    "Y -> a Y | b X\n"
    "X -> a X | b\n";

constexpr std::string_view w_omega_text =
    "order: b < a\n"
    "start: S\n"
    "S -> a S X | b\n"
    "X -> a X | b\n";

constexpr std::string_view case2_text =
    "order: c < b < d < a\n"
    "start: X\n"
    "X -> a X d | a Y b\n"
    "Y -> a Y b | c\n";

void BM_order_type_w3(benchmark::State& state) {
  Grammar g = parse_grammar(w3_text);
  for (auto _ : state) benchmark::DoNotOptimize(order_type_of_grammar(g));
}
BENCHMARK(BM_order_type_w3);

void BM_order_type_w_omega(benchmark::State& state) {
  Grammar g = parse_grammar(w_omega_text);
  for (auto _ : state) benchmark::DoNotOptimize(order_type_of_grammar(g));
}
BENCHMARK(BM_order_type_w_omega);

void BM_order_type_case2(benchmark::State& state) {
  Grammar g = parse_grammar(case2_text);
  for (auto _ : state) benchmark::DoNotOptimize(order_type_of_grammar(g));
}
BENCHMARK(BM_order_type_case2);

void BM_normalize_w_omega(benchmark::State& state) {
  Grammar g = parse_grammar(w_omega_text);
  for (auto _ : state) benchmark::DoNotOptimize(to_normal_form(g));
}
BENCHMARK(BM_normalize_w_omega);

void BM_enumerate_w_omega(benchmark::State& state) {
  Grammar g = parse_grammar(w_omega_text);
  FormSet start{SForm{Symbol{false, g.start}}};
  for (auto _ : state) benchmark::DoNotOptimize(lex_enumerate(g, start, 12));
}
BENCHMARK(BM_enumerate_w_omega);

}  // namespace

BENCHMARK_MAIN();
