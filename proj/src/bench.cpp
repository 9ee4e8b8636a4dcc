#include "ltlbit/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>
#include <system_error>

#include "ltlbit/eval.hpp"
#include "ltlbit/trace.hpp"

namespace ltlbit {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_number(std::string_view field, std::string_view column) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw Error("bench csv: bad " + std::string(column) + " '" + std::string(field) + "'");
  }
  return value;
}

std::size_t raw_payload_bytes(std::size_t length) {
  return (length + 63) / 64 * sizeof(std::uint64_t);
}

double ratio(std::size_t bytes, std::size_t raw_bytes) {
  return raw_bytes == 0 ? 1.0 : static_cast<double>(bytes) / static_cast<double>(raw_bytes);
}

// Keeps evaluation results observable so timed loops are not optimized away.
volatile bool g_sink = false;

template <BitmapBackend B>
BenchRecord measure(const Trace& trace, const BenchFormula& f, const BenchConfig& c) {
  using Clock = std::chrono::steady_clock;
  BenchRecord r;
  r.formula_id = f.id;
  r.backend = std::string(B::kName);
  r.trace_length = trace.length();
  r.repeat = c.repeat;
  r.seed = c.seed;
  try {
    const GroundEnv<B> env = build_ground_bitmaps<B>(trace);
    auto run_once = [&] {
      if (c.include_ingest) {
        const GroundEnv<B> fresh = build_ground_bitmaps<B>(trace);
        g_sink = evaluate(f.formula, fresh).verdict;
      } else {
        g_sink = evaluate(f.formula, env).verdict;
      }
    };
    run_once();
    std::vector<double> ms;
    for (std::size_t k = 0; k < std::max<std::size_t>(c.reps, 1); ++k) {
      const auto t0 = Clock::now();
      run_once();
      const auto t1 = Clock::now();
      ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    r.wall_ms = median(ms);
    r.throughput_hz = r.wall_ms > 0 ? static_cast<double>(trace.length()) / (r.wall_ms / 1e3) : 0;

    MemoryTracker mem;
    evaluate(f.formula, env, &mem);
    r.peak_bitmap_bytes = mem.peak;
    r.compressed_ratio =
        ratio(env.payload_bytes(), raw_payload_bytes(trace.length()) * trace.num_vars());
  } catch (const std::exception&) {
    r.failed = true;
  }
  return r;
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw Error("median of empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return (lower + upper) / 2;
}

void write_bench_csv_header(std::ostream& out) { out << kBenchCsvHeader << '\n'; }

void write_bench_record(std::ostream& out, const BenchRecord& r) {
  out << r.formula_id << ',' << r.backend << ',' << r.trace_length << ',' << r.repeat << ',';
  if (r.failed) {
    out << "error,error,error,error";
  } else {
    out << format_double(r.throughput_hz) << ',' << r.peak_bitmap_bytes << ','
        << format_double(r.compressed_ratio) << ',' << format_double(r.wall_ms);
  }
  out << ',' << r.seed << '\n';
}

BenchRecord parse_bench_record(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::vector<std::string_view> f;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      f.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  if (f.size() != 9) {
    throw Error("bench csv: expected 9 fields, found " + std::to_string(f.size()));
  }
  BenchRecord r;
  r.formula_id = std::string(f[0]);
  r.backend = std::string(f[1]);
  r.trace_length = parse_number<std::size_t>(f[2], "trace_length");
  r.repeat = parse_number<std::size_t>(f[3], "repeat");
  r.failed = f[4] == "error";
  if (!r.failed) {
    r.throughput_hz = parse_number<double>(f[4], "throughput_hz");
    r.peak_bitmap_bytes = parse_number<std::size_t>(f[5], "peak_bitmap_bytes");
    r.compressed_ratio = parse_number<double>(f[6], "compressed_ratio");
    r.wall_ms = parse_number<double>(f[7], "wall_ms");
  }
  r.seed = parse_number<std::uint64_t>(f[8], "seed");
  return r;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  const std::size_t per_length = config.formulas.size() * config.backends.size();
  std::vector<BenchRecord> rows(per_length * config.lengths.size());
  for (std::size_t li = 0; li < config.lengths.size(); ++li) {
    TraceGenSpec spec;
    spec.length = config.lengths[li];
    spec.num_vars = config.num_vars;
    spec.repeat = config.repeat;
    spec.seed = config.seed;
    const Trace trace = generate_random_trace(spec);

    const auto cells = static_cast<std::int64_t>(per_length);
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs) if (config.jobs > 1)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
      const auto fi = static_cast<std::size_t>(cell) / config.backends.size();
      const auto bi = static_cast<std::size_t>(cell) % config.backends.size();
      rows[li * per_length + static_cast<std::size_t>(cell)] =
          with_backend(config.backends[bi], [&](auto tag) {
            return measure<typename decltype(tag)::type>(trace, config.formulas[fi], config);
          });
    }
  }
  return rows;
}

std::vector<CompressionRow> compression_report(const CompressionConfig& config) {
  std::vector<CompressionRow> rows;
  for (const std::size_t length : config.lengths) {
    for (const std::size_t repeat : config.repeats) {
      TraceGenSpec spec;
      spec.length = length;
      spec.num_vars = config.num_vars;
      spec.repeat = repeat;
      spec.seed = config.seed;
      const Trace trace = generate_random_trace(spec);
      const std::size_t raw_bytes = raw_payload_bytes(length);
      for (const Backend backend : config.backends) {
        with_backend(backend, [&](auto tag) {
          using B = typename decltype(tag)::type;
          const GroundEnv<B> env = build_ground_bitmaps<B>(trace);
          CompressionRow base;
          base.backend = std::string(B::kName);
          base.trace_length = length;
          base.repeat = repeat;
          base.seed = config.seed;
          for (const auto& name : trace.variables()) {
            CompressionRow row = base;
            row.variable = name;
            row.payload_bytes = env.find(name)->payload_bytes();
            row.raw_payload_bytes = raw_bytes;
            row.compressed_ratio = ratio(row.payload_bytes, raw_bytes);
            rows.push_back(row);
          }
          CompressionRow all = base;
          all.variable = "ALL";
          all.payload_bytes = env.payload_bytes();
          all.raw_payload_bytes = raw_bytes * trace.num_vars();
          all.compressed_ratio = ratio(all.payload_bytes, all.raw_payload_bytes);
          rows.push_back(all);
        });
      }
    }
  }
  return rows;
}

void write_compression_csv(std::ostream& out, const std::vector<CompressionRow>& rows) {
  out << kCompressionCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.backend << ',' << r.trace_length << ',' << r.repeat << ',' << r.variable << ','
        << r.payload_bytes << ',' << r.raw_payload_bytes << ','
        << format_double(r.compressed_ratio) << ',' << r.seed << '\n';
  }
}

}  // namespace ltlbit
