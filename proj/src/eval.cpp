#include "ltlbit/eval.hpp"

namespace ltlbit {

bool empty_trace_verdict(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom: return false;
    case Op::kNot: return !empty_trace_verdict(f.lhs());
    case Op::kAnd: return empty_trace_verdict(f.lhs()) && empty_trace_verdict(f.rhs());
    case Op::kOr: return empty_trace_verdict(f.lhs()) || empty_trace_verdict(f.rhs());
    case Op::kImplies:
      return !empty_trace_verdict(f.lhs()) || empty_trace_verdict(f.rhs());
    case Op::kGlobally: return true;
    case Op::kNext:
    case Op::kFinally:
    case Op::kUntil: return false;
  }
  return false;
}

}  // namespace ltlbit
