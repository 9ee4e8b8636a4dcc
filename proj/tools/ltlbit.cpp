// ltlbit: check LTL formulas against traces and benchmark bitmap backends.
//
//   ltlbit check --trace t.csv --formula "G (p -> F q)" [--positions]
//   ltlbit check --trace t.csv --formula-id D08 --backend rle64
//   ltlbit bench --length 10000 --length 100000 --backend raw > bench.csv
//   ltlbit compress-report --repeat 1 --repeat 64 > ratios.csv
//   ltlbit gen --length 1000 --repeat 32 --output t.csv
//
// check exits 0 when the formula holds, 1 when it is violated and 2 on usage
// or input errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ltlbit/backends.hpp"
#include "ltlbit/bench.hpp"
#include "ltlbit/corpus.hpp"
#include "ltlbit/eval.hpp"
#include "ltlbit/formula.hpp"
#include "ltlbit/trace.hpp"

namespace {

using namespace ltlbit;

constexpr int kHolds = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct FormulaArgs {
  std::string text;
  std::string id;
};

std::pair<std::string, Formula> resolve_formula(const FormulaArgs& args) {
  if (!args.id.empty()) {
    const auto entry = corpus_lookup(args.id);
    if (!entry) throw Error("unknown formula id '" + args.id + "'");
    return {entry->id, entry->formula};
  }
  return {"custom", parse_formula(args.text)};
}

std::vector<Backend> resolve_backends(const std::vector<std::string>& names) {
  std::vector<Backend> out;
  for (const auto& n : names) out.push_back(parse_backend(n));
  if (out.empty()) out.assign(kAllBackends.begin(), kAllBackends.end());
  return out;
}

struct CheckArgs {
  std::string trace_path;
  std::string format = "csv";
  FormulaArgs formula;
  std::string backend = "raw";
  std::string slice_key;
  bool positions = false;
};

template <BitmapBackend B>
bool check_one(const Formula& f, const Trace& trace, const CheckArgs& args,
               const std::string& label) {
  const GroundEnv<B> env = build_ground_bitmaps<B>(trace);
  const auto t0 = std::chrono::steady_clock::now();
  const EvalResult<B> r = evaluate(f, env);
  const auto t1 = std::chrono::steady_clock::now();
  std::cout << label << "events: " << trace.length() << '\n'
            << label << "verdict: " << (r.verdict ? "true" : "false") << '\n'
            << label << "eval_ms: "
            << std::chrono::duration<double, std::milli>(t1 - t0).count() << '\n';
  if (args.positions) std::cout << label << "positions: " << to_string(r.bitmap) << '\n';
  return r.verdict;
}

int run_check(const CheckArgs& args) {
  const auto [id, f] = resolve_formula(args.formula);
  const Backend backend = parse_backend(args.backend);
  LoadOptions options;
  options.format = parse_trace_format(args.format);
  options.key_column = args.slice_key;
  std::ifstream in(args.trace_path);
  if (!in) throw Error("cannot open trace '" + args.trace_path + "'");
  const KeyedTrace keyed = load_keyed_trace(in, options);

  std::cout << "formula: " << render(f) << '\n'
            << "formula_id: " << id << '\n'
            << "size: " << formula_size(f) << '\n'
            << "depth: " << formula_depth(f) << '\n'
            << "backend: " << backend_name(backend) << '\n';

  return with_backend(backend, [&](auto tag) {
    using B = typename decltype(tag)::type;
    if (args.slice_key.empty()) {
      return check_one<B>(f, keyed.trace, args, "") ? kHolds : kViolated;
    }
    // The property must hold on every slice.
    bool all = true;
    for (const auto& [key, sub] : slice(keyed)) {
      all = check_one<B>(f, sub, args, "slice " + key + " ") && all;
    }
    std::cout << "slices: " << slice(keyed).size() << '\n'
              << "verdict: " << (all ? "true" : "false") << '\n';
    return all ? kHolds : kViolated;
  });
}

struct BenchArgs {
  std::vector<std::string> formula_ids;
  std::string formula_text;
  std::vector<std::string> backends;
  std::vector<std::size_t> lengths;
  std::size_t vars = 10;
  std::size_t repeat = 1;
  std::uint64_t seed = 0;
  std::size_t reps = 5;
  bool include_ingest = false;
  int jobs = 1;
};

int run_bench_cmd(const BenchArgs& args) {
  BenchConfig config;
  for (const auto& id : args.formula_ids) {
    config.formulas.push_back({id, resolve_formula({"", id}).second});
  }
  if (!args.formula_text.empty()) {
    config.formulas.push_back({"custom", parse_formula(args.formula_text)});
  }
  if (config.formulas.empty()) {
    for (const auto& e : corpus()) config.formulas.push_back({e.id, e.formula});
  }
  config.backends = resolve_backends(args.backends);
  config.lengths = args.lengths.empty() ? std::vector<std::size_t>{10'000, 100'000, 1'000'000}
                                        : args.lengths;
  config.num_vars = args.vars;
  config.repeat = args.repeat;
  config.seed = args.seed;
  config.reps = args.reps;
  config.include_ingest = args.include_ingest;
  config.jobs = args.jobs;

  std::cerr << "# generator " << kGeneratorAlgorithm << " seed " << args.seed << '\n';
  write_bench_csv_header(std::cout);
  for (const auto& r : run_bench(config)) write_bench_record(std::cout, r);
  return 0;
}

struct CompressArgs {
  std::vector<std::string> backends;
  std::vector<std::size_t> lengths;
  std::vector<std::size_t> repeats;
  std::size_t vars = 10;
  std::uint64_t seed = 0;
};

int run_compress(const CompressArgs& args) {
  CompressionConfig config;
  config.backends = resolve_backends(args.backends);
  config.lengths = args.lengths.empty() ? std::vector<std::size_t>{1'000'000} : args.lengths;
  config.repeats = args.repeats.empty() ? std::vector<std::size_t>{1, 32, 64} : args.repeats;
  config.num_vars = args.vars;
  config.seed = args.seed;
  std::cerr << "# generator " << kGeneratorAlgorithm << " seed " << args.seed << '\n';
  write_compression_csv(std::cout, compression_report(config));
  return 0;
}

struct GenArgs {
  TraceGenSpec spec;
  std::string format = "csv";
  std::string output;
};

int run_gen(const GenArgs& args) {
  const Trace t = generate_random_trace(args.spec);
  const TraceFormat format = parse_trace_format(args.format);
  if (args.output.empty()) {
    write_trace(std::cout, t, format);
    return 0;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw Error("cannot write '" + args.output + "'");
  write_trace(out, t, format);
  return 0;
}

void add_seed(CLI::App* cmd, std::uint64_t& seed) {
  cmd->add_option("--seed", seed, "PRNG seed")->envname("LTLBIT_SEED");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offline LTL evaluation over bitmaps"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* cmd_check = app.add_subcommand("check", "Evaluate a formula on a trace file");
  cmd_check->add_option("--trace", check.trace_path, "Trace file")->required();
  cmd_check->add_option("--format", check.format, "csv or bitlines")
      ->check(CLI::IsMember({"csv", "bitlines"}));
  auto* text = cmd_check->add_option("--formula", check.formula.text, "Formula text");
  auto* id = cmd_check->add_option("--formula-id", check.formula.id, "Corpus formula id");
  text->excludes(id);
  cmd_check->add_option("--backend", check.backend, "raw, rle64 or roaring")
      ->check(CLI::IsMember({"raw", "rle64", "roaring"}));
  cmd_check->add_option("--slice-key", check.slice_key,
                        "csv column holding an integer slice id; the formula must hold "
                        "on every slice");
  cmd_check->add_flag("--positions", check.positions, "Print the per-position bitmap");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Measure throughput and memory as CSV");
  cmd_bench->add_option("--formula-id", bench.formula_ids, "Corpus ids (default: all)");
  cmd_bench->add_option("--formula", bench.formula_text, "Extra formula, reported as 'custom'");
  cmd_bench->add_option("--backend", bench.backends, "Backends (default: all)")
      ->check(CLI::IsMember({"raw", "rle64", "roaring"}));
  cmd_bench->add_option("--length", bench.lengths, "Trace lengths (default: 1e4 1e5 1e6)");
  cmd_bench->add_option("--vars", bench.vars, "Variables per event");
  cmd_bench->add_option("--repeat", bench.repeat, "Run factor of the generator")
      ->check(CLI::PositiveNumber);
  add_seed(cmd_bench, bench.seed);
  cmd_bench->add_option("--reps", bench.reps, "Timed repetitions per cell")
      ->check(CLI::PositiveNumber);
  cmd_bench->add_flag("--include-ingest", bench.include_ingest,
                      "Time ground-bitmap construction as well");
  cmd_bench->add_option("--jobs", bench.jobs, "Cells measured concurrently")
      ->check(CLI::PositiveNumber);

  CompressArgs compress;
  auto* cmd_compress =
      app.add_subcommand("compress-report", "Ground bitmap sizes per backend as CSV");
  cmd_compress->add_option("--backend", compress.backends, "Backends (default: all)")
      ->check(CLI::IsMember({"raw", "rle64", "roaring"}));
  cmd_compress->add_option("--length", compress.lengths, "Trace lengths (default: 1e6)");
  cmd_compress->add_option("--repeat", compress.repeats, "Run factors (default: 1 32 64)")
      ->check(CLI::PositiveNumber);
  cmd_compress->add_option("--vars", compress.vars, "Variables per event");
  add_seed(cmd_compress, compress.seed);

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Write a random trace");
  cmd_gen->add_option("--length", gen.spec.length, "Events")->required();
  cmd_gen->add_option("--vars", gen.spec.num_vars, "Variables per event");
  cmd_gen->add_option("--repeat", gen.spec.repeat, "Copies of each random tuple")
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--density", gen.spec.density, "Probability of a 1")
      ->check(CLI::Range(0.0, 1.0));
  add_seed(cmd_gen, gen.spec.seed);
  cmd_gen->add_option("--format", gen.format, "csv or bitlines")
      ->check(CLI::IsMember({"csv", "bitlines"}));
  cmd_gen->add_option("--output", gen.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*cmd_check) {
      if (check.formula.text.empty() && check.formula.id.empty()) {
        std::cerr << "error: one of --formula or --formula-id is required\n";
        return kUsage;
      }
      return run_check(check);
    }
    if (*cmd_bench) return run_bench_cmd(bench);
    if (*cmd_compress) return run_compress(compress);
    return run_gen(gen);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
