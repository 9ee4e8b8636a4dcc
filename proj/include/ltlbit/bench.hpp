#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ltlbit/backends.hpp"
#include "ltlbit/formula.hpp"

namespace ltlbit {

/// One benchmark cell. CSV columns follow the field order.
struct BenchRecord {
  std::string formula_id;
  std::string backend;
  std::size_t trace_length = 0;
  std::size_t repeat = 1;
  double throughput_hz = 0;
  std::size_t peak_bitmap_bytes = 0;
  /// Ground bitmap payload under `backend` divided by the raw payload.
  double compressed_ratio = 0;
  double wall_ms = 0;
  std::uint64_t seed = 0;
  /// Set when the cell failed; measured columns are then written as "error".
  bool failed = false;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kBenchCsvHeader =
    "formula_id,backend,trace_length,repeat,throughput_hz,peak_bitmap_bytes,"
    "compressed_ratio,wall_ms,seed";

void write_bench_csv_header(std::ostream& out);
void write_bench_record(std::ostream& out, const BenchRecord& r);
/// Parses one data row; throws ltlbit::Error on a malformed row.
BenchRecord parse_bench_record(std::string_view line);

struct BenchFormula {
  std::string id;
  Formula formula;
};

struct BenchConfig {
  std::vector<BenchFormula> formulas;
  std::vector<Backend> backends;
  std::vector<std::size_t> lengths;
  std::size_t num_vars = 10;
  std::size_t repeat = 1;
  std::uint64_t seed = 0;
  /// Timed repetitions per cell after one untimed warm-up.
  std::size_t reps = 5;
  /// Time ground-bitmap construction together with evaluation.
  bool include_ingest = false;
  /// Cells run concurrently when > 1.
  int jobs = 1;
};

/// Measures every (length, formula, backend) cell on a generated trace per
/// length. Rows come back in that nesting order whatever `jobs` is.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Per-variable ground bitmap sizes; variable "ALL" sums a whole trace.
struct CompressionRow {
  std::string backend;
  std::size_t trace_length = 0;
  std::size_t repeat = 1;
  std::string variable;
  std::size_t payload_bytes = 0;
  std::size_t raw_payload_bytes = 0;
  double compressed_ratio = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kCompressionCsvHeader =
    "backend,trace_length,repeat,variable,payload_bytes,raw_payload_bytes,"
    "compressed_ratio,seed";

struct CompressionConfig {
  std::vector<Backend> backends;
  std::vector<std::size_t> lengths;
  std::vector<std::size_t> repeats;
  std::size_t num_vars = 10;
  std::uint64_t seed = 0;
};

std::vector<CompressionRow> compression_report(const CompressionConfig& config);
void write_compression_csv(std::ostream& out, const std::vector<CompressionRow>& rows);

/// Median of a non-empty sample.
double median(std::vector<double> values);

}  // namespace ltlbit
