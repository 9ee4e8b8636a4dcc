#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ltlbit/kernels.hpp"

namespace ltlbit {
namespace {

using Words = std::vector<std::uint64_t>;

Words random_words(std::mt19937_64& rng, std::size_t n) {
  Words w(n);
  for (auto& x : w) x = rng();
  return w;
}

class KernelTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = GetParam();
  const Words a = random_words(rng, n), b = random_words(rng, n);
  Words s(n), p(n);

  kernels::serial::and_words(a, b, s);
  kernels::parallel::and_words(a, b, p);
  EXPECT_EQ(s, p);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(s[i], a[i] & b[i]);

  kernels::serial::or_words(a, b, s);
  kernels::parallel::or_words(a, b, p);
  EXPECT_EQ(s, p);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(s[i], a[i] | b[i]);

  kernels::serial::not_words(a, s);
  kernels::parallel::not_words(a, p);
  EXPECT_EQ(s, p);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(s[i], ~a[i]);

  kernels::serial::shift_down_one(a, s);
  kernels::parallel::shift_down_one(a, p);
  EXPECT_EQ(s, p);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t hi = i + 1 < n ? a[i + 1] << 63 : 0;
    ASSERT_EQ(s[i], (a[i] >> 1) | hi);
  }
}

TEST_P(KernelTest, TransposeMatchesCellLookup) {
  std::mt19937_64 rng(GetParam() + 1);
  const std::size_t events = GetParam() * 3 + 7;
  const std::size_t vars = 1 + rng() % 12;
  std::vector<std::uint8_t> cells(events * vars);
  for (auto& c : cells) c = rng() & 1;
  const std::size_t wpc = (events + 63) / 64;

  Words s(wpc * vars, 0), p(wpc * vars, 0);
  EXPECT_EQ(kernels::serial::transpose_events(cells, events, vars, wpc, s), events);
  EXPECT_EQ(kernels::parallel::transpose_events(cells, events, vars, wpc, p), events);
  EXPECT_EQ(s, p);
  for (std::size_t v = 0; v < vars; ++v) {
    for (std::size_t e = 0; e < events; ++e) {
      ASSERT_EQ((s[v * wpc + e / 64] >> (e % 64)) & 1, cells[e * vars + v]);
    }
  }
}

// Sizes straddle the single-threaded cutoff.
INSTANTIATE_TEST_SUITE_P(Sizes, KernelTest,
                         ::testing::Values(0, 1, 2, 63, 1000, kernels::kParallelMinWords - 1,
                                           kernels::kParallelMinWords,
                                           kernels::kParallelMinWords * 3 + 5));

TEST(KernelInfoTest, ThreadsAvailable) { EXPECT_GE(kernels::max_threads(), 1); }

}  // namespace
}  // namespace ltlbit
