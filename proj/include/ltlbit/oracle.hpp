#pragma once

#include <vector>

#include "ltlbit/formula.hpp"
#include "ltlbit/trace.hpp"

namespace ltlbit {

/// Reference semantics: entry i is true iff the suffix of `trace` starting at
/// event i satisfies f. Evaluates every quantifier literally over j in [i, n),
/// so it costs O(n^2 |f|) and shares no code with the bitmap evaluator.
/// Throws UnboundAtom for variables the trace lacks.
std::vector<bool> oracle_eval(const Formula& f, const Trace& trace);

}  // namespace ltlbit
