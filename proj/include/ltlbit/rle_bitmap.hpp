#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltlbit/bitmap.hpp"

namespace ltlbit {

/// A bitmap encoded with a 64-bit *Enhanced Word-Aligned Hybrid* (EWAH)
/// scheme. The stream is a sequence of groups; each group is one marker word
/// followed by verbatim *dirty* words. A marker holds:
///
/// 1. Bit 0: value of the fill (clean) words.
/// 2. Bits [1, 33): number of fill words, all 0s or all 1s.
/// 3. Bits [33, 64): number of dirty words that follow the marker.
///
/// The trailing `size() % 64` bits live in a separate tail word outside the
/// stream, so appends never rewrite encoded words.
///
/// Canonical form, kept by every operation:
///
/// 1. Dirty words are never all 0s or all 1s.
/// 2. A marker with no fill words has fill bit 0 and at least one dirty word.
/// 3. Groups are merged on append: a group without dirty words is never
///    followed by one that could have been folded into it, unless a marker
///    field of the first is saturated.
class RleBitmap {
 public:
  static constexpr std::string_view kName = "rle64";

  static constexpr std::uint64_t kMaxFillWords = (std::uint64_t{1} << 32) - 1;
  static constexpr std::uint64_t kMaxDirtyWords = (std::uint64_t{1} << 31) - 1;

  RleBitmap() = default;

  static RleBitmap from_words(std::span<const std::uint64_t> words,
                              std::size_t size);

  std::size_t size() const noexcept { return full_words_ * 64 + tail_bits_; }
  bool empty() const noexcept { return size() == 0; }
  bool get(std::size_t i) const;
  Position next(bool v, std::size_t from) const;
  Position last(bool v) const;
  std::size_t payload_bytes() const noexcept {
    return (stream_.size() + (tail_bits_ > 0 ? 1 : 0)) * sizeof(std::uint64_t);
  }

  /// Encoded words, excluding the tail.
  std::span<const std::uint64_t> stream() const noexcept { return stream_; }
  std::size_t marker_count() const noexcept;

  void append(bool v, std::size_t count);
  void append_range(const RleBitmap& src, std::size_t start, std::size_t count);
  void pop_front();

  friend RleBitmap operator&(const RleBitmap& a, const RleBitmap& b);
  friend RleBitmap operator|(const RleBitmap& a, const RleBitmap& b);
  friend RleBitmap operator~(const RleBitmap& a);
  friend bool operator==(const RleBitmap& a, const RleBitmap& b) noexcept;

  /// Walks the stream and checks the canonical-form rules above. Returns an
  /// empty string when valid, otherwise a description of the first problem.
  std::string validate() const;

  /// Forward cursor that resumes from the group it stopped in, so a
  /// non-decreasing sequence of queries costs O(groups) in total. Fill runs
  /// of the wrong value are skipped in one step. A query behind the current
  /// group restarts from the beginning of the stream.
  class Scanner {
   public:
    explicit Scanner(const RleBitmap& b) : bitmap_(&b) {}
    Position next(bool v, std::size_t from);
    std::size_t position() const noexcept { return position_; }

   private:
    const RleBitmap* bitmap_;
    std::size_t marker_ = 0;      // stream index of the current marker
    std::uint64_t group_word_ = 0;  // word index where the current group starts
    std::size_t position_ = 0;
  };

 private:
  friend class RleRunReader;

  static constexpr std::uint64_t make_marker(bool fill, std::uint64_t fills,
                                             std::uint64_t dirty) {
    return std::uint64_t{fill} | (fills << 1) | (dirty << 33);
  }
  static constexpr bool fill_value(std::uint64_t m) { return m & 1; }
  static constexpr std::uint64_t fill_words(std::uint64_t m) {
    return (m >> 1) & kMaxFillWords;
  }
  static constexpr std::uint64_t dirty_words(std::uint64_t m) {
    return m >> 33;
  }

  void append_fill_words(bool v, std::uint64_t count);
  void append_dirty_word(std::uint64_t w);
  void append_full_word(std::uint64_t w);
  /// Appends the low `count` (<= 64) bits of `bits`; higher bits must be 0.
  void append_bits(std::uint64_t bits, std::size_t count);

  template <class WordOp>
  static RleBitmap merge(const RleBitmap& a, const RleBitmap& b, WordOp op);

  std::vector<std::uint64_t> stream_;
  std::size_t last_marker_ = 0;
  std::uint64_t full_words_ = 0;
  std::uint64_t tail_ = 0;
  std::size_t tail_bits_ = 0;
};

}  // namespace ltlbit
