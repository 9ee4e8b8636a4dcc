#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltlbit/bitmap.hpp"
#include "ltlbit/ground_env.hpp"

namespace ltlbit {

/// A finite sequence of events; each event assigns a Boolean to every
/// variable. Stored row-major, one byte (0 or 1) per cell.
class Trace {
 public:
  Trace() = default;
  /// Throws ltlbit::Error on empty or duplicate names.
  explicit Trace(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_vars() const noexcept { return variables_.size(); }
  std::size_t length() const noexcept { return length_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool value(std::size_t event, std::size_t var) const {
    return cells_[event * variables_.size() + var] != 0;
  }
  std::span<const std::uint8_t> row(std::size_t event) const {
    return {cells_.data() + event * variables_.size(), variables_.size()};
  }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  /// Appends one event; `bits` holds one value per variable.
  void push_event(std::span<const std::uint8_t> bits);
  void reserve(std::size_t events) { cells_.reserve(events * variables_.size()); }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<std::uint8_t> cells_;
  std::size_t length_ = 0;
};

enum class TraceFormat { kCsv, kBitlines };

/// "csv" or "bitlines".
TraceFormat parse_trace_format(std::string_view name);

/// Maps one cell to a Boolean, or nullopt to reject it. This is the hook for
/// richer event types: a mapper can evaluate a predicate over the raw cell.
using CellMapper =
    std::function<std::optional<bool>(std::string_view column, std::string_view cell)>;

/// Accepts exactly "0" and "1".
std::optional<bool> binary_cell(std::string_view column, std::string_view cell);

struct LoadOptions {
  TraceFormat format = TraceFormat::kCsv;
  /// csv only: name of an integer-valued slice key column. Empty cells mark
  /// keyless events. Empty string means no key column.
  std::string key_column;
  CellMapper mapper = binary_cell;
};

/// A trace plus one optional slice key per event.
struct KeyedTrace {
  Trace trace;
  std::vector<std::optional<std::string>> keys;
};

/// Reads a trace.
///
///   csv       header row of variable names, then rows of 0/1 cells
///   bitlines  space-separated variable names, then one line per event of
///             num_vars contiguous 0/1 characters
///
/// Blank lines are ignored. Throws TraceParseError with the 1-based line on
/// ragged rows, rejected cells or duplicate variable names.
Trace load_trace(std::istream& in, TraceFormat format);
KeyedTrace load_keyed_trace(std::istream& in, const LoadOptions& options);

/// Writes the canonical form of `format`; load_trace reads it back unchanged.
void write_trace(std::ostream& out, const Trace& trace, TraceFormat format);

/// Name of the slice that collects events without a key.
inline constexpr std::string_view kUnkeyedSlice = "unkeyed";

/// Partitions events by key, preserving order within each slice. Keyless
/// events go to kUnkeyedSlice.
std::map<std::string, Trace> slice(const KeyedTrace& keyed);

struct TraceGenSpec {
  std::size_t length = 0;
  std::size_t num_vars = 10;
  /// Each random tuple is emitted this many times in a row (>= 1).
  std::size_t repeat = 1;
  std::uint64_t seed = 0;
  /// Probability that a cell is 1.
  double density = 0.5;
};

/// PRNG behind generate_random_trace; reported in benchmark output.
inline constexpr std::string_view kGeneratorAlgorithm = "mt19937_64";

/// Deterministic random trace over variables s0..s{num_vars-1}. Blocks of
/// `repeat` consecutive events are identical.
Trace generate_random_trace(const TraceGenSpec& spec);

/// Every variable column packed LSB-first, num_vars columns of
/// `words_per_column` words each, built in one pass over the events.
struct PackedColumns {
  std::size_t words_per_column = 0;
  std::vector<std::uint64_t> words;
  std::size_t events_visited = 0;
};
PackedColumns pack_columns(const Trace& trace);

/// One ground bitmap per variable; bit i is the variable's value at event i.
template <BitmapBackend B>
GroundEnv<B> build_ground_bitmaps(const Trace& trace,
                                  std::size_t* events_visited = nullptr) {
  const PackedColumns packed = pack_columns(trace);
  if (events_visited != nullptr) *events_visited = packed.events_visited;
  GroundEnv<B> env(trace.length());
  const std::span<const std::uint64_t> all = packed.words;
  for (std::size_t v = 0; v < trace.num_vars(); ++v) {
    env.bind(trace.variables()[v],
             bitmap_from_words<B>(
                 all.subspan(v * packed.words_per_column, packed.words_per_column),
                 trace.length()));
  }
  return env;
}

}  // namespace ltlbit
