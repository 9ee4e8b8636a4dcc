#include <gtest/gtest.h>

#include <random>

#include "ltlbit/backends.hpp"
#include "ltlbit/trace.hpp"
#include "test_util.hpp"

namespace ltlbit {
namespace {

using testing::make;
using testing::Model;
using testing::model_of;

std::size_t dirty_words_in(const RleBitmap& b) {
  std::size_t dirty = 0;
  const auto s = b.stream();
  for (std::size_t i = 0; i < s.size(); i += 1 + (s[i] >> 33)) dirty += s[i] >> 33;
  return dirty;
}

TEST(RleBitmapTest, LongRunsStayTiny) {
  RleBitmap b;
  b.append(false, 1'000'000);
  b.append(true, 1'000'000);
  EXPECT_EQ(b.size(), 2'000'000u);
  EXPECT_LE(b.payload_bytes() / 8, 10u);
  EXPECT_EQ(b.validate(), "");
  EXPECT_EQ(b.next(true, 0), Position{1'000'000});
  EXPECT_EQ(b.last(false), Position{999'999});
}

TEST(RleBitmapTest, AlternatingBitsNeedDirtyWords) {
  RleBitmap b;
  for (int i = 0; i < 32; ++i) {
    b.append(false, 1);
    b.append(true, 1);
  }
  EXPECT_GE(dirty_words_in(b), 1u);
  EXPECT_EQ(b.validate(), "");
}

TEST(RleBitmapTest, AppendingNothingLeavesStream) {
  RleBitmap b = from_string<RleBitmap>(std::string(200, '1') + "0101");
  const std::vector<std::uint64_t> before(b.stream().begin(), b.stream().end());
  b.append(true, 0);
  b.append(false, 0);
  EXPECT_EQ(std::vector<std::uint64_t>(b.stream().begin(), b.stream().end()), before);
}

TEST(RleBitmapTest, NextSkipsFills) {
  RleBitmap b;
  b.append(false, 1000);
  b.append(true, 1);
  b.append(false, 23);
  EXPECT_EQ(next(true, b, 0), Position{1000});
  EXPECT_EQ(next(false, from_string<RleBitmap>(std::string(64, '1')), 0), kNoPosition);
}

TEST(RleBitmapTest, HugeFillCountsFitMarker) {
  RleBitmap b;
  const std::size_t n = (std::size_t{1} << 31) * 64 + 5;
  b.append(true, n);
  EXPECT_EQ(b.size(), n);
  EXPECT_EQ(b.validate(), "");
  EXPECT_EQ(b.next(false, 0), kNoPosition);
  EXPECT_EQ(b.last(true), Position{n - 1});
}

TEST(RleBitmapTest, PayloadOfZeros) {
  EXPECT_LE(from_string<RleBitmap>(std::string(640, '0')).payload_bytes(), 16u);
  EXPECT_EQ(from_string<RawBitmap>(std::string(640, '0')).payload_bytes(), 80u);
}

TEST(RleBitmapTest, CanonicalAfterEveryOperation) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = rng() % 1200;
    const Model ma = testing::shaped_bits(rng, n);
    const Model mb = testing::shaped_bits(rng, n);
    const RleBitmap a = make<RleBitmap>(ma);
    const RleBitmap b = make<RleBitmap>(mb);
    const std::size_t s = rng() % (n + 1);
    const RleBitmap results[] = {
        a,
        a & b,
        a | b,
        ~a,
        add_many(a, rng() & 1, rng() % 300),
        copy_to(b, a, s, rng() % (n - s + 1)),
        n > 0 ? remove_first_bit(a) : a,
        RleBitmap::from_words(RawBitmap::from_words(std::vector<std::uint64_t>(), 0).words(), 0),
    };
    for (const auto& r : results) ASSERT_EQ(r.validate(), "") << testing::str(ma);
  }
}

TEST(RleBitmapTest, FromWordsMatchesAppends) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const Model m = testing::shaped_bits(rng, rng() % 1000);
    const RawBitmap raw = make<RawBitmap>(m);
    const RleBitmap direct = RleBitmap::from_words(raw.words(), raw.size());
    ASSERT_EQ(direct.validate(), "");
    ASSERT_EQ(direct, make<RleBitmap>(m));
  }
}

// Plain next() on the encoded stream, no cursor involved.
TEST(RleBitmapTest, DifferentialAgainstRaw) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = rng() % 5000;
    const Model m = testing::shaped_bits(rng, n);
    const RleBitmap c = make<RleBitmap>(m);
    const RawBitmap r = make<RawBitmap>(m);
    for (int q = 0; q < 20; ++q) {
      const std::size_t s = rng() % (n + 1);
      ASSERT_EQ(next(true, c, s), next(true, r, s));
      ASSERT_EQ(next(false, c, s), next(false, r, s));
    }
  }
}

TEST(RoaringBitmapTest, GetProbesContainers) {
  RoaringBitmap b;
  b.append(false, 5);
  b.append(true, 1);
  b.append(false, 70000 - 6);
  b.append(true, 1);
  EXPECT_TRUE(b.get(70000));
  EXPECT_TRUE(b.get(5));
  EXPECT_FALSE(b.get(6));
  EXPECT_EQ(b.container_count(), 2u);
  EXPECT_THROW(b.get(70001), std::out_of_range);
}

TEST(RoaringBitmapTest, EmptySetPayload) {
  RoaringBitmap b;
  b.append(false, 640);
  EXPECT_LE(b.payload_bytes(), 8u);
  EXPECT_EQ(b.size(), 640u);
}

TEST(RoaringBitmapTest, ContainerTypeFollowsCardinality) {
  RoaringBitmap b;
  b.append(true, RoaringBitmap::kArrayMax);
  EXPECT_EQ(b.bitset_container_count(), 0u);
  EXPECT_EQ(b.validate(), "");
  b.append(true, 1);
  EXPECT_EQ(b.bitset_container_count(), 1u);
  EXPECT_EQ(b.validate(), "");
  // Dropping back to the threshold converts to an array again.
  b = b & from_string<RoaringBitmap>(std::string(RoaringBitmap::kArrayMax, '1') + "0");
  EXPECT_EQ(b.cardinality(), RoaringBitmap::kArrayMax);
  EXPECT_EQ(b.bitset_container_count(), 0u);
  EXPECT_EQ(b.validate(), "");
}

TEST(RoaringBitmapTest, InvariantsAfterEveryOperation) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = rng() % 200'000;
    const double density = std::array{0.001, 0.05, 0.5, 0.99}[rng() % 4];
    const Model ma = testing::random_bits(rng, n, density);
    const Model mb = testing::run_bits(rng, n, 1 + rng() % 5000);
    const RoaringBitmap a = make<RoaringBitmap>(ma);
    const RoaringBitmap b = make<RoaringBitmap>(mb);
    const std::size_t s = rng() % (n + 1);
    const RoaringBitmap results[] = {
        a, a & b, a | b, ~a, add_many(a, true, rng() % 70000),
        copy_to(b, a, s, rng() % (n - s + 1)), n > 0 ? remove_first_bit(a) : a,
    };
    for (const auto& r : results) ASSERT_EQ(r.validate(), "");
    const RawBitmap raw = make<RawBitmap>(ma);
    for (int q = 0; q < 50 && n > 0; ++q) {
      const std::size_t i = rng() % n;
      ASSERT_EQ(a.get(i), raw.get(i));
    }
    ASSERT_TRUE(same_bits(a & b, make<RawBitmap>(ma) & make<RawBitmap>(mb)));
  }
}

TEST(RoaringBitmapTest, LengthCeiling) {
  RoaringBitmap b;
  b.append(false, RoaringBitmap::kMaxSize);
  EXPECT_THROW(b.append(false, 1), std::length_error);
}

double rle_ratio(std::size_t repeat) {
  TraceGenSpec spec;
  spec.length = 200'000;
  spec.repeat = repeat;
  spec.seed = 99;
  const Trace t = generate_random_trace(spec);
  return static_cast<double>(build_ground_bitmaps<RleBitmap>(t).payload_bytes()) /
         static_cast<double>(build_ground_bitmaps<RawBitmap>(t).payload_bytes());
}

TEST(CompressionTest, RunsOf64Compress) {
  // Every word is a fill; a marker starts whenever the value flips (p = 1/2).
  EXPECT_LE(rle_ratio(64), 0.75);
  EXPECT_NEAR(rle_ratio(64), 0.5, 0.03);
}

TEST(CompressionTest, RunsOf32MatchWordModel) {
  // Two independent 32-bit blocks per word: fill with p = 1/2, dirty
  // otherwise. A fill word opens a group unless it extends a fill of the same
  // value, so markers cost 1/2 * 3/4 per word and the ratio is 1/2 + 3/8.
  EXPECT_NEAR(rle_ratio(32), 0.875, 0.03);
}

TEST(CompressionTest, DenseRandomOverheadIsBounded) {
  EXPECT_LE(rle_ratio(1), 1.25);
  EXPECT_GE(rle_ratio(1), 1.0);
}

}  // namespace
}  // namespace ltlbit
