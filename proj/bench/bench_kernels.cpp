#include <benchmark/benchmark.h>

#include "symdyn/kernels.hpp"
#include "symdyn/language.hpp"

using namespace symdyn;

namespace {

std::vector<Symbol> rule110() {
  std::vector<Symbol> t(8);
  for (int i = 0; i < 8; ++i) t[static_cast<std::size_t>(i)] = static_cast<Symbol>((110 >> i) & 1);
  return t;
}

std::vector<Word> targets(std::size_t len) {
  std::vector<Word> out;
  for (std::size_t m = 0; m < (std::size_t{1} << len); m += 3) {
    Word w(len, '\0');
    for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<char>((m >> (len - 1 - i)) & 1);
    out.push_back(w);
  }
  return out;
}

void BM_ca_preimage_serial(benchmark::State& st) {
  auto t = targets(static_cast<std::size_t>(st.range(0)));
  auto rule = rule110();
  for (auto _ : st) benchmark::DoNotOptimize(ca_preimage_words(2, 1, rule, t, static_cast<std::size_t>(st.range(0)), Exec::Serial));
}

void BM_ca_preimage_parallel(benchmark::State& st) {
  auto t = targets(static_cast<std::size_t>(st.range(0)));
  auto rule = rule110();
  for (auto _ : st) benchmark::DoNotOptimize(ca_preimage_words(2, 1, rule, t, static_cast<std::size_t>(st.range(0)), Exec::Parallel));
}

void BM_ca_preimage_brute(benchmark::State& st) {
  auto t = targets(static_cast<std::size_t>(st.range(0)));
  auto rule = rule110();
  for (auto _ : st) benchmark::DoNotOptimize(ca_preimage_brute(2, 1, rule, t, static_cast<std::size_t>(st.range(0))));
}

void BM_ball_graph(benchmark::State& st) {
  auto ca = cellular_automaton(Alphabet({"0", "1"}), LocalRule{1, rule110()});
  auto p = Partition::cylinders(ca->space(), 0);
  auto e = st.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : st) benchmark::DoNotOptimize(induced_automaton(*ca, p, static_cast<int>(st.range(0)), e));
}

void BM_ball_graph_reference(benchmark::State& st) {
  auto ca = cellular_automaton(Alphabet({"0", "1"}), LocalRule{1, rule110()});
  auto p = Partition::cylinders(ca->space(), 0);
  for (auto _ : st) benchmark::DoNotOptimize(induced_automaton_reference(*ca, p, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_ca_preimage_serial)->Arg(8)->Arg(12);
BENCHMARK(BM_ca_preimage_parallel)->Arg(8)->Arg(12);
BENCHMARK(BM_ca_preimage_brute)->Arg(8)->Arg(12);
BENCHMARK(BM_ball_graph)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Args({2, 1});
BENCHMARK(BM_ball_graph_reference)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
