#pragma once

// Bitmap evaluation of LTL formulas. For a formula f over a trace of n
// events, the result bitmap has bit i set iff the suffix starting at event i
// satisfies f.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "ltlbit/bitmap.hpp"
#include "ltlbit/formula.hpp"
#include "ltlbit/ground_env.hpp"

namespace ltlbit {

/// Running total of live bitmap payload bytes, with its high-water mark.
struct MemoryTracker {
  std::size_t live = 0;
  std::size_t peak = 0;

  void acquire(std::size_t bytes) {
    live += bytes;
    peak = std::max(peak, live);
  }
  void release(std::size_t bytes) { live -= bytes; }
};

template <BitmapBackend B>
struct EvalResult {
  B bitmap;
  bool verdict = false;
};

namespace detail {

template <BitmapBackend B>
void require_same_length(const B& a, const B& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
}

inline std::int64_t as_index(Position p) {
  return p ? static_cast<std::int64_t>(*p) : -1;
}

}  // namespace detail

template <BitmapBackend B>
B op_not(const B& a) {
  return ~a;
}

template <BitmapBackend B>
B op_and(const B& a, const B& b) {
  detail::require_same_length(a, b);
  return a & b;
}

template <BitmapBackend B>
B op_or(const B& a, const B& b) {
  detail::require_same_length(a, b);
  return a | b;
}

template <BitmapBackend B>
B op_implies(const B& a, const B& b) {
  detail::require_same_length(a, b);
  return ~a | b;
}

/// X a: drop the first bit, append a 0.
template <BitmapBackend B>
B op_next(B a) {
  if (a.size() == 0) return a;
  B o = remove_first_bit(std::move(a));
  return add_many(std::move(o), false, 1);
}

/// G a: 0 up to and including the last 0 of a, 1 after it.
template <BitmapBackend B>
B op_globally(const B& a) {
  const Position p = last(false, a);
  if (!p) return a;
  B o;
  o = add_many(std::move(o), false, *p + 1);
  return add_many(std::move(o), true, a.size() - *p - 1);
}

/// F a: 1 up to and including the last 1 of a, 0 after it.
template <BitmapBackend B>
B op_finally(const B& a) {
  const Position p = last(true, a);
  if (!p) return a;
  B o;
  o = add_many(std::move(o), true, *p + 1);
  return add_many(std::move(o), false, a.size() - *p - 1);
}

/// a U b by a run-skipping scan. a0/a1/b0/b1 hold the next 0/1 of each
/// operand at or after the scan position p, or -1 when there is none.
template <BitmapBackend B>
B op_until(const B& a, const B& b) {
  detail::require_same_length(a, b);
  using detail::as_index;
  const auto n = static_cast<std::int64_t>(a.size());
  typename B::Scanner a_ones{a}, a_zeros{a}, b_ones{b}, b_zeros{b};
  auto from = [](std::int64_t i) { return static_cast<std::size_t>(i); };
  auto count = [](std::int64_t len) { return static_cast<std::size_t>(len); };

  B o;
  std::int64_t p = 0, a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  while (p < n) {
    if (a1 <= p) a1 = as_index(a_ones.next(true, from(p)));
    if (b1 <= p) b1 = as_index(b_ones.next(true, from(p)));
    if (a1 == -1 || b1 == -1) break;

    const std::int64_t n1 = std::min(a1, b1);
    if (n1 > p) {
      o = add_many(std::move(o), false, count(n1 - p));
      p = n1;
      continue;
    }

    if (p == b1) {
      if (b0 <= b1) {
        b0 = as_index(b_zeros.next(false, from(b1)));
        if (b0 == -1) b0 = n;
      }
      o = add_many(std::move(o), true, count(b0 - p));
      p = b0;
      continue;
    }

    if (a0 <= a1) {
      a0 = as_index(a_zeros.next(false, from(a1)));
      if (a0 == -1) a0 = n;
    }
    if (a0 >= b1) {
      o = add_many(std::move(o), true, count(b1 - p + 1));
      p = b1 + 1;
    } else {
      o = add_many(std::move(o), false, count(a0 - p + 1));
      p = a0 + 1;
    }
  }

  if (b1 == -1) {
    o = add_many(std::move(o), false, a.size() - o.size());
  } else if (a1 == -1) {
    o = copy_to(std::move(o), b, from(p), count(n - p));
  }
  return o;
}

/// Verdict of f on the empty trace: G holds, F X U and atoms do not.
bool empty_trace_verdict(const Formula& f);

namespace detail {

/// A bitmap that is either borrowed from the environment or owned.
template <BitmapBackend B>
class Operand {
 public:
  explicit Operand(const B* borrowed) : borrowed_(borrowed) {}
  explicit Operand(B owned) : owned_(std::move(owned)) {}

  const B& get() const { return borrowed_ != nullptr ? *borrowed_ : *owned_; }
  B take() && { return borrowed_ != nullptr ? *borrowed_ : std::move(*owned_); }

 private:
  const B* borrowed_ = nullptr;
  std::optional<B> owned_;
};

template <BitmapBackend B>
Operand<B> eval_node(const Formula& f, const GroundEnv<B>& env,
                     MemoryTracker& mem) {
  if (f.op() == Op::kAtom) {
    const B* bound = env.find(f.name());
    if (bound == nullptr) throw UnboundAtom(f.name());
    mem.acquire(bound->payload_bytes());
    return Operand<B>(bound);
  }

  Operand<B> lhs = eval_node(f.lhs(), env, mem);
  const std::size_t lhs_bytes = lhs.get().payload_bytes();
  if (is_unary(f.op())) {
    B out;
    switch (f.op()) {
      case Op::kNot: out = op_not(lhs.get()); break;
      case Op::kNext: out = op_next(std::move(lhs).take()); break;
      case Op::kGlobally: out = op_globally(lhs.get()); break;
      default: out = op_finally(lhs.get()); break;
    }
    mem.acquire(out.payload_bytes());
    mem.release(lhs_bytes);
    return Operand<B>(std::move(out));
  }

  Operand<B> rhs = eval_node(f.rhs(), env, mem);
  const std::size_t rhs_bytes = rhs.get().payload_bytes();
  B out;
  switch (f.op()) {
    case Op::kAnd: out = op_and(lhs.get(), rhs.get()); break;
    case Op::kOr: out = op_or(lhs.get(), rhs.get()); break;
    case Op::kImplies: out = op_implies(lhs.get(), rhs.get()); break;
    default: out = op_until(lhs.get(), rhs.get()); break;
  }
  mem.acquire(out.payload_bytes());
  mem.release(lhs_bytes + rhs_bytes);
  return Operand<B>(std::move(out));
}

}  // namespace detail

/// Evaluates f bottom-up. When `memory` is given, the peak of live bitmap
/// payload bytes during the traversal is recorded in it. Throws UnboundAtom.
template <BitmapBackend B>
EvalResult<B> evaluate(const Formula& f, const GroundEnv<B>& env,
                       MemoryTracker* memory = nullptr) {
  MemoryTracker local;
  MemoryTracker& mem = memory != nullptr ? *memory : local;
  EvalResult<B> result{detail::eval_node(f, env, mem).take(), false};
  result.verdict = env.trace_length() == 0 ? empty_trace_verdict(f)
                                           : result.bitmap.get(0);
  return result;
}

template <BitmapBackend B>
bool verdict(const Formula& f, const GroundEnv<B>& env) {
  return evaluate(f, env).verdict;
}

}  // namespace ltlbit
