// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ltlbit/kernels.hpp"

namespace {

using namespace ltlbit;

std::vector<std::uint64_t> random_words(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

template <auto Kernel>
void BM_Binary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_words(n, 1), b = random_words(n, 2);
  std::vector<std::uint64_t> out(n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out.data());
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * n * 8 * 3));
}

template <auto Kernel>
void BM_Shift(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_words(n, 3);
  std::vector<std::uint64_t> out(n);
  for (auto _ : state) {
    Kernel(a, out);
    benchmark::DoNotOptimize(out.data());
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * n * 8 * 2));
}

template <auto Kernel>
void BM_Transpose(benchmark::State& state) {
  const auto events = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t kVars = 10;
  std::mt19937_64 rng(4);
  std::vector<std::uint8_t> cells(events * kVars);
  for (auto& c : cells) c = rng() & 1;
  const std::size_t wpc = (events + 63) / 64;
  std::vector<std::uint64_t> out(wpc * kVars);
  for (auto _ : state) {
    std::fill(out.begin(), out.end(), 0);
    benchmark::DoNotOptimize(Kernel(cells, events, kVars, wpc, out));
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * events));
}

constexpr std::int64_t kSmall = 1 << 10;
constexpr std::int64_t kLarge = 1 << 20;

BENCHMARK(BM_Binary<kernels::serial::and_words>)->Name("and/serial")->Range(kSmall, kLarge);
BENCHMARK(BM_Binary<kernels::parallel::and_words>)->Name("and/parallel")->Range(kSmall, kLarge);
BENCHMARK(BM_Binary<kernels::serial::or_words>)->Name("or/serial")->Range(kSmall, kLarge);
BENCHMARK(BM_Binary<kernels::parallel::or_words>)->Name("or/parallel")->Range(kSmall, kLarge);
BENCHMARK(BM_Shift<kernels::serial::shift_down_one>)->Name("shift/serial")->Range(kSmall, kLarge);
BENCHMARK(BM_Shift<kernels::parallel::shift_down_one>)
    ->Name("shift/parallel")
    ->Range(kSmall, kLarge);
BENCHMARK(BM_Transpose<kernels::serial::transpose_events>)
    ->Name("transpose/serial")
    ->Range(1 << 14, 1 << 20);
BENCHMARK(BM_Transpose<kernels::parallel::transpose_events>)
    ->Name("transpose/parallel")
    ->Range(1 << 14, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
