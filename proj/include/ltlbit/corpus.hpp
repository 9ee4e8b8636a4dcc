#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltlbit/formula.hpp"

namespace ltlbit {

struct CorpusEntry {
  std::string id;    // "A1", "D08", "S02", ...
  std::string text;  // source text in parse_formula syntax
  Formula formula;
};

/// The built-in benchmark formulas: 7 single-operator formulas (Axx), 37
/// specification patterns (Dxx) and 13 randomly generated formulas (Sxx), all
/// over the variables s0..s9. Parsed once on first use.
std::span<const CorpusEntry> corpus();

/// Entry with the given id, or nullopt.
std::optional<CorpusEntry> corpus_lookup(std::string_view id);

}  // namespace ltlbit
