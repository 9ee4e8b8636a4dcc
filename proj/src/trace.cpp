#include "ltlbit/trace.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <utility>

#include "ltlbit/errors.hpp"
#include "ltlbit/kernels.hpp"

namespace ltlbit {

namespace {

void check_names(const std::vector<std::string>& names, std::size_t line) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw TraceParseError("empty variable name", line);
    if (!seen.insert(n).second) {
      throw TraceParseError("duplicate variable '" + n + "'", line);
    }
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

/// Yields non-blank lines with their 1-based numbers, '\r' stripped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

KeyedTrace load_csv(std::istream& in, const LoadOptions& options) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw TraceParseError("missing header", reader.number() + 1);

  const auto header = split(line, ',');
  std::vector<std::string> names;
  std::optional<std::size_t> key_index;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (!options.key_column.empty() && header[c] == options.key_column) {
      if (key_index) {
        throw TraceParseError("duplicate key column '" + options.key_column + "'",
                              reader.number());
      }
      key_index = c;
    } else {
      names.emplace_back(header[c]);
    }
  }
  if (!options.key_column.empty() && !key_index) {
    throw TraceParseError("key column '" + options.key_column + "' not found",
                          reader.number());
  }
  check_names(names, reader.number());

  KeyedTrace out{Trace(names), {}};
  std::vector<std::uint8_t> bits(names.size());
  while (reader.next(line)) {
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw TraceParseError("expected " + std::to_string(header.size()) +
                                " cells, found " + std::to_string(cells.size()),
                            reader.number());
    }
    std::optional<std::string> key;
    std::size_t v = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (key_index && c == *key_index) {
        if (cells[c].empty()) continue;
        if (!is_integer(cells[c])) {
          throw TraceParseError("key '" + std::string(cells[c]) + "' is not an integer",
                                reader.number());
        }
        key = std::string(cells[c]);
        continue;
      }
      const auto bit = options.mapper(names[v], cells[c]);
      if (!bit) {
        throw TraceParseError("invalid cell '" + std::string(cells[c]) +
                                  "' for variable '" + names[v] + "'",
                              reader.number());
      }
      bits[v++] = *bit ? 1 : 0;
    }
    out.trace.push_event(bits);
    out.keys.push_back(std::move(key));
  }
  return out;
}

KeyedTrace load_bitlines(std::istream& in, const LoadOptions& options) {
  if (!options.key_column.empty()) {
    throw Error("slice keys are only supported for csv traces");
  }
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw TraceParseError("missing header", reader.number() + 1);
  auto names = split_words(line);
  check_names(names, reader.number());

  KeyedTrace out{Trace(names), {}};
  std::vector<std::uint8_t> bits(names.size());
  while (reader.next(line)) {
    if (line.size() != names.size()) {
      throw TraceParseError("expected " + std::to_string(names.size()) +
                                " bits, found " + std::to_string(line.size()),
                            reader.number());
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      const auto bit = options.mapper(names[v], std::string_view(line).substr(v, 1));
      if (!bit) {
        throw TraceParseError("invalid bit '" + line.substr(v, 1) +
                                  "' for variable '" + names[v] + "'",
                              reader.number());
      }
      bits[v] = *bit ? 1 : 0;
    }
    out.trace.push_event(bits);
    out.keys.emplace_back();
  }
  return out;
}

}  // namespace

Trace::Trace(std::vector<std::string> variables) : variables_(std::move(variables)) {
  std::set<std::string_view> seen;
  for (const auto& n : variables_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> Trace::index_of(std::string_view name) const {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

void Trace::push_event(std::span<const std::uint8_t> bits) {
  if (bits.size() != variables_.size()) {
    throw Error("event has " + std::to_string(bits.size()) + " values, trace has " +
                std::to_string(variables_.size()) + " variables");
  }
  for (const std::uint8_t b : bits) cells_.push_back(b != 0 ? 1 : 0);
  ++length_;
}

TraceFormat parse_trace_format(std::string_view name) {
  if (name == "csv") return TraceFormat::kCsv;
  if (name == "bitlines") return TraceFormat::kBitlines;
  throw Error("unknown trace format '" + std::string(name) + "'");
}

std::optional<bool> binary_cell(std::string_view, std::string_view cell) {
  if (cell == "0") return false;
  if (cell == "1") return true;
  return std::nullopt;
}

Trace load_trace(std::istream& in, TraceFormat format) {
  LoadOptions options;
  options.format = format;
  return load_keyed_trace(in, options).trace;
}

KeyedTrace load_keyed_trace(std::istream& in, const LoadOptions& options) {
  return options.format == TraceFormat::kCsv ? load_csv(in, options)
                                             : load_bitlines(in, options);
}

void write_trace(std::ostream& out, const Trace& trace, TraceFormat format) {
  const char sep = format == TraceFormat::kCsv ? ',' : ' ';
  const auto& vars = trace.variables();
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (v > 0) out << sep;
    out << vars[v];
  }
  out << '\n';
  std::string line;
  for (std::size_t e = 0; e < trace.length(); ++e) {
    line.clear();
    for (const std::uint8_t b : trace.row(e)) {
      if (format == TraceFormat::kCsv && !line.empty()) line += ',';
      line += b ? '1' : '0';
    }
    line += '\n';
    out << line;
  }
}

std::map<std::string, Trace> slice(const KeyedTrace& keyed) {
  const Trace& t = keyed.trace;
  if (keyed.keys.size() != t.length()) {
    throw Error("slice: " + std::to_string(keyed.keys.size()) + " keys for " +
                std::to_string(t.length()) + " events");
  }
  std::map<std::string, Trace> out;
  for (std::size_t e = 0; e < t.length(); ++e) {
    const std::string key = keyed.keys[e] ? *keyed.keys[e] : std::string(kUnkeyedSlice);
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, Trace(t.variables())).first;
    it->second.push_event(t.row(e));
  }
  return out;
}

Trace generate_random_trace(const TraceGenSpec& spec) {
  if (spec.repeat == 0) throw Error("repeat must be at least 1");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw Error("density must lie in [0, 1]");
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < spec.num_vars; ++v) names.push_back("s" + std::to_string(v));
  Trace trace(std::move(names));
  trace.reserve(spec.length);

  std::mt19937_64 rng(spec.seed);
  // A cell is 1 when a uniform 64-bit draw falls below density * 2^64.
  const long double scaled = static_cast<long double>(spec.density) * 18446744073709551616.0L;
  const bool always = spec.density >= 1.0;
  const auto threshold = always ? std::uint64_t{0} : static_cast<std::uint64_t>(scaled);

  std::vector<std::uint8_t> tuple(spec.num_vars);
  for (std::size_t e = 0; e < spec.length; ++e) {
    if (e % spec.repeat == 0) {
      for (auto& cell : tuple) cell = always || rng() < threshold ? 1 : 0;
    }
    trace.push_event(tuple);
  }
  return trace;
}

PackedColumns pack_columns(const Trace& trace) {
  PackedColumns packed;
  packed.words_per_column = (trace.length() + 63) / 64;
  packed.words.assign(packed.words_per_column * trace.num_vars(), 0);
  packed.events_visited = kernels::parallel::transpose_events(
      trace.cells(), trace.length(), trace.num_vars(), packed.words_per_column,
      packed.words);
  return packed;
}

}  // namespace ltlbit
