#pragma once

// Backend-independent bitmap contract.
//
// A bitmap is a logical sequence of n bits b_0..b_{n-1}; index 0 is the first
// (oldest) event. Every backend models `BitmapBackend` and may therefore be
// plugged into the evaluator without changes to it.

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ltlbit/errors.hpp"

namespace ltlbit {

/// A bit index, or no position at all.
using Position = std::optional<std::size_t>;
inline constexpr std::nullopt_t kNoPosition = std::nullopt;

template <class B>
concept BitmapBackend =
    std::regular<B> &&
    requires(const B& cb, B& b, bool v, std::size_t i,
             typename B::Scanner& scanner) {
      { B::kName } -> std::convertible_to<std::string_view>;
      { cb.size() } -> std::same_as<std::size_t>;
      { cb.get(i) } -> std::same_as<bool>;
      { cb.next(v, i) } -> std::same_as<Position>;
      { cb.last(v) } -> std::same_as<Position>;
      { cb.payload_bytes() } -> std::same_as<std::size_t>;
      { cb & cb } -> std::same_as<B>;
      { cb | cb } -> std::same_as<B>;
      { ~cb } -> std::same_as<B>;
      b.append(v, i);
      b.append_range(cb, i, i);
      b.pop_front();
      requires std::constructible_from<typename B::Scanner, const B&>;
      { scanner.next(v, i) } -> std::same_as<Position>;
      { scanner.position() } -> std::same_as<std::size_t>;
    };

// Value-level API. Bitmaps are passed and returned by value; callers that
// move in get in-place updates.

template <BitmapBackend B>
B add_many(B b, bool v, std::size_t count) {
  b.append(v, count);
  return b;
}

template <BitmapBackend B>
B copy_to(B dst, const B& src, std::size_t start, std::size_t count) {
  if (start > src.size() || count > src.size() - start) {
    throw std::out_of_range("copy_to: range [" + std::to_string(start) +
                            ", +" + std::to_string(count) +
                            ") exceeds source length " +
                            std::to_string(src.size()));
  }
  dst.append_range(src, start, count);
  return dst;
}

template <BitmapBackend B>
B remove_first_bit(B b) {
  if (b.size() == 0) {
    throw std::out_of_range("remove_first_bit on empty bitmap");
  }
  b.pop_front();
  return b;
}

template <BitmapBackend B>
Position next(bool v, const B& b, std::size_t start) {
  if (start > b.size()) {
    throw std::out_of_range("next: start " + std::to_string(start) +
                            " beyond length " + std::to_string(b.size()));
  }
  return b.next(v, start);
}

template <BitmapBackend B>
Position last(bool v, const B& b) {
  return b.last(v);
}

/// Renders bits as "0"/"1" characters, index 0 first.
template <BitmapBackend B>
std::string to_string(const B& b) {
  std::string out(b.size(), '0');
  typename B::Scanner ones{b};
  std::size_t pos = 0;
  while (auto p = ones.next(true, pos)) {
    out[*p] = '1';
    pos = *p + 1;
  }
  return out;
}

/// Parses a "0"/"1" string into a bitmap, appending whole runs.
template <BitmapBackend B>
B from_string(std::string_view bits) {
  B b;
  std::size_t i = 0;
  while (i < bits.size()) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string contains '" + std::string(1, c) +
                                  "'");
    }
    std::size_t j = i;
    while (j < bits.size() && bits[j] == c) ++j;
    b.append(c == '1', j - i);
    i = j;
  }
  return b;
}

/// Semantic equality across (possibly different) backends.
template <BitmapBackend A, BitmapBackend B>
bool same_bits(const A& a, const B& b) {
  if (a.size() != b.size()) return false;
  typename A::Scanner sa{a};
  typename B::Scanner sb{b};
  std::size_t pos = 0;
  while (pos < a.size()) {
    // Both must agree on where the next one and the next zero are.
    const Position oa = sa.next(true, pos);
    if (oa != sb.next(true, pos)) return false;
    if (!oa) return true;
    pos = *oa;
    const Position za = a.next(false, pos);
    if (za != b.next(false, pos)) return false;
    if (!za) return true;
    pos = *za;
  }
  return true;
}

/// Converts between backends run by run.
template <BitmapBackend To, BitmapBackend From>
To convert(const From& src) {
  To out;
  std::size_t pos = 0;
  bool v = src.size() > 0 && src.get(0);
  while (pos < src.size()) {
    const Position end = src.next(!v, pos);
    const std::size_t stop = end ? *end : src.size();
    out.append(v, stop - pos);
    pos = stop;
    v = !v;
  }
  return out;
}

/// Builds a bitmap from the first `size` bits of LSB-first packed words.
/// Backends with a native word constructor use it; others get runs appended.
template <BitmapBackend B>
B bitmap_from_words(std::span<const std::uint64_t> words, std::size_t size) {
  if constexpr (requires { B::from_words(words, size); }) {
    return B::from_words(words, size);
  } else {
    B b;
    std::size_t pos = 0;
    bool run_value = false;
    std::size_t run_length = 0;
    auto emit = [&](bool v, std::size_t n) {
      if (n == 0) return;
      if (v != run_value && run_length > 0) {
        b.append(run_value, run_length);
        run_length = 0;
      }
      run_value = v;
      run_length += n;
    };
    for (std::size_t wi = 0; pos < size; ++wi) {
      const std::size_t n = size - pos < 64 ? size - pos : 64;
      std::uint64_t w = words[wi];
      std::size_t used = 0;
      while (used < n) {
        const bool bit = w & 1;
        std::size_t len = static_cast<std::size_t>(
            bit ? std::countr_one(w) : std::countr_zero(w));
        if (len > n - used) len = n - used;
        emit(bit, len);
        used += len;
        w = len >= 64 ? 0 : w >> len;
      }
      pos += n;
    }
    b.append(run_value, run_length);
    return b;
  }
}

}  // namespace ltlbit
