#include "ltlbit/oracle.hpp"

#include "ltlbit/errors.hpp"

namespace ltlbit {

namespace {

using Column = std::vector<bool>;

Column eval(const Formula& f, const Trace& t) {
  const std::size_t n = t.length();
  Column out(n, false);
  if (f.op() == Op::kAtom) {
    const auto var = t.index_of(f.name());
    if (!var) throw UnboundAtom(f.name());
    for (std::size_t i = 0; i < n; ++i) out[i] = t.value(i, *var);
    return out;
  }

  const Column a = eval(f.lhs(), t);
  const Column b = is_binary(f.op()) ? eval(f.rhs(), t) : Column{};
  for (std::size_t i = 0; i < n; ++i) {
    bool v = false;
    switch (f.op()) {
      case Op::kNot: v = !a[i]; break;
      case Op::kAnd: v = a[i] && b[i]; break;
      case Op::kOr: v = a[i] || b[i]; break;
      case Op::kImplies: v = !a[i] || b[i]; break;
      case Op::kNext: v = i + 1 < n && a[i + 1]; break;
      case Op::kGlobally:
        v = true;
        for (std::size_t j = i; j < n; ++j) v = v && a[j];
        break;
      case Op::kFinally:
        for (std::size_t j = i; j < n; ++j) v = v || a[j];
        break;
      case Op::kUntil:
        // Some j >= i satisfies b, and a holds on every k in [i, j).
        for (std::size_t j = i; j < n && !v; ++j) {
          bool prefix = true;
          for (std::size_t k = i; k < j; ++k) prefix = prefix && a[k];
          v = b[j] && prefix;
        }
        break;
      case Op::kAtom: break;
    }
    out[i] = v;
  }
  return out;
}

}  // namespace

std::vector<bool> oracle_eval(const Formula& f, const Trace& trace) {
  return eval(f, trace);
}

}  // namespace ltlbit
