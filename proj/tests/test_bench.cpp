#include <gtest/gtest.h>

#include <sstream>

#include "ltlbit/bench.hpp"
#include "ltlbit/corpus.hpp"
#include "ltlbit/errors.hpp"

namespace ltlbit {
namespace {

BenchConfig small_config() {
  BenchConfig c;
  for (const char* id : {"A1", "D08", "S04"}) c.formulas.push_back({id, corpus_lookup(id)->formula});
  c.backends.assign(kAllBackends.begin(), kAllBackends.end());
  c.lengths = {0, 1000, 5000};
  c.seed = 17;
  c.reps = 3;
  return c;
}

TEST(BenchCsvTest, RecordsRoundTrip) {
  BenchRecord r{"D08", "rle64", 1'000'000, 64, 2345678.25, 4096, 0.515625, 426.3, 42, false};
  std::ostringstream out;
  write_bench_record(out, r);
  EXPECT_EQ(parse_bench_record(out.str()), r);

  BenchRecord failed{"S02", "roaring", 10, 1, 0, 0, 0, 0, 7, true};
  std::ostringstream out2;
  write_bench_record(out2, failed);
  EXPECT_EQ(out2.str(), "S02,roaring,10,1,error,error,error,error,7\n");
  EXPECT_EQ(parse_bench_record(out2.str()), failed);
}

TEST(BenchCsvTest, RejectsMalformedRows) {
  EXPECT_THROW(parse_bench_record("A1,raw,10"), Error);
  EXPECT_THROW(parse_bench_record("A1,raw,ten,1,1,1,1,1,1"), Error);
  EXPECT_THROW(parse_bench_record("A1,raw,10,1,1,1,1,1,"), Error);
}

TEST(BenchCsvTest, HeaderMatchesFieldOrder) {
  std::ostringstream out;
  write_bench_csv_header(out);
  EXPECT_EQ(out.str(),
            "formula_id,backend,trace_length,repeat,throughput_hz,peak_bitmap_bytes,"
            "compressed_ratio,wall_ms,seed\n");
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(median({3, 1, 2}), 2);
  EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(median({}), Error);
}

TEST(RunBenchTest, OneRowPerCellInOrder) {
  const BenchConfig c = small_config();
  const auto rows = run_bench(c);
  ASSERT_EQ(rows.size(), 3u * 3u * 3u);
  std::size_t i = 0;
  for (std::size_t length : c.lengths) {
    for (const auto& f : c.formulas) {
      for (Backend b : c.backends) {
        const auto& r = rows[i++];
        EXPECT_FALSE(r.failed);
        EXPECT_EQ(r.formula_id, f.id);
        EXPECT_EQ(r.backend, backend_name(b));
        EXPECT_EQ(r.trace_length, length);
        EXPECT_EQ(r.seed, 17u);
        if (b == Backend::kRaw) EXPECT_EQ(r.compressed_ratio, 1.0);
      }
    }
  }
}

TEST(RunBenchTest, NonTimingColumnsAreDeterministic) {
  BenchConfig c = small_config();
  auto strip = [](std::vector<BenchRecord> rows) {
    for (auto& r : rows) r.throughput_hz = r.wall_ms = 0;
    return rows;
  };
  const auto first = strip(run_bench(c));
  c.jobs = 2;
  c.include_ingest = true;
  EXPECT_EQ(strip(run_bench(c)), first);
}

TEST(RunBenchTest, FailedCellsAreMarked) {
  BenchConfig c = small_config();
  c.formulas = {{"bad", parse_formula("nosuchvar")}};
  c.lengths = {10};
  for (const auto& r : run_bench(c)) EXPECT_TRUE(r.failed);
}

TEST(CompressionReportTest, RowsAndRawRatio) {
  CompressionConfig c;
  c.backends.assign(kAllBackends.begin(), kAllBackends.end());
  c.lengths = {10'000};
  c.repeats = {1, 32, 64};
  c.num_vars = 4;
  c.seed = 5;
  const auto rows = compression_report(c);
  ASSERT_EQ(rows.size(), 3u * 3u * 5u);
  for (const auto& r : rows) {
    if (r.backend == "raw") EXPECT_EQ(r.compressed_ratio, 1.0);
    if (r.backend == "rle64" && r.repeat == 64) EXPECT_LE(r.compressed_ratio, 0.75);
  }
  std::ostringstream out;
  write_compression_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), kCompressionCsvHeader);
}

}  // namespace
}  // namespace ltlbit
