#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ltlbit/bitmap.hpp"

namespace ltlbit {

/// Uncompressed bitmap: 64-bit words, bits packed LSB-first. Bits at
/// indices >= size() in the final word are always zero.
class RawBitmap {
 public:
  static constexpr std::string_view kName = "raw";
  static constexpr std::size_t kWordBits = 64;

  RawBitmap() = default;

  /// Adopts `words` as the first `size` bits; excess bits are cleared.
  static RawBitmap from_words(std::vector<std::uint64_t> words,
                              std::size_t size);
  static RawBitmap from_words(std::span<const std::uint64_t> words,
                              std::size_t size) {
    return from_words(std::vector<std::uint64_t>(words.begin(), words.end()),
                      size);
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool get(std::size_t i) const;
  Position next(bool v, std::size_t from) const;
  Position last(bool v) const;
  std::size_t payload_bytes() const noexcept {
    return words_.size() * sizeof(std::uint64_t);
  }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  void append(bool v, std::size_t count);
  void append_range(const RawBitmap& src, std::size_t start, std::size_t count);
  void pop_front();

  friend RawBitmap operator&(const RawBitmap& a, const RawBitmap& b);
  friend RawBitmap operator|(const RawBitmap& a, const RawBitmap& b);
  friend RawBitmap operator~(const RawBitmap& a);
  friend bool operator==(const RawBitmap&, const RawBitmap&) = default;

  /// Forward cursor. Random access makes resumption trivial, so the cursor
  /// only remembers the last absolute position it reported.
  class Scanner {
   public:
    explicit Scanner(const RawBitmap& b) : bitmap_(&b) {}
    Position next(bool v, std::size_t from) {
      Position p = bitmap_->next(v, from);
      position_ = p ? *p : bitmap_->size();
      return p;
    }
    std::size_t position() const noexcept { return position_; }

   private:
    const RawBitmap* bitmap_;
    std::size_t position_ = 0;
  };

 private:
  /// 64 bits starting at bit `pos`; bits past size() read as zero.
  std::uint64_t word_at(std::size_t pos) const noexcept;
  void append_bits(std::uint64_t bits, std::size_t count);
  void clear_padding() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace ltlbit
