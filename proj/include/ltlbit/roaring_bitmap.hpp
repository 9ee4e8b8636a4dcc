#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ltlbit/bitmap.hpp"

namespace ltlbit {

/// Two-level bitmap in the Roaring style. Set positions are split by their
/// high 16 bits into chunks; each chunk is held by a container that is either
/// a sorted array of low 16-bit values (at most 4096 of them) or a 2^16-bit
/// bitset. The logical length is stored explicitly, so trailing zeros are
/// representable.
class RoaringBitmap {
 public:
  static constexpr std::string_view kName = "roaring";
  static constexpr std::size_t kArrayMax = 4096;
  static constexpr std::size_t kChunkBits = std::size_t{1} << 16;
  /// Largest representable length.
  static constexpr std::size_t kMaxSize = std::size_t{1} << 32;

  RoaringBitmap() = default;

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool get(std::size_t i) const;
  Position next(bool v, std::size_t from) const;
  Position last(bool v) const;
  std::size_t payload_bytes() const noexcept;
  std::size_t cardinality() const noexcept;
  std::size_t container_count() const noexcept { return containers_.size(); }
  /// Number of bitset (as opposed to array) containers.
  std::size_t bitset_container_count() const noexcept;

  void append(bool v, std::size_t count);
  void append_range(const RoaringBitmap& src, std::size_t start,
                    std::size_t count);
  void pop_front();

  friend RoaringBitmap operator&(const RoaringBitmap& a, const RoaringBitmap& b);
  friend RoaringBitmap operator|(const RoaringBitmap& a, const RoaringBitmap& b);
  friend RoaringBitmap operator~(const RoaringBitmap& a);
  friend bool operator==(const RoaringBitmap&, const RoaringBitmap&) = default;

  /// Checks container invariants. Empty string when valid.
  std::string validate() const;

  class Scanner {
   public:
    explicit Scanner(const RoaringBitmap& b) : bitmap_(&b) {}
    Position next(bool v, std::size_t from) {
      Position p = bitmap_->next(v, from);
      position_ = p ? *p : bitmap_->size();
      return p;
    }
    std::size_t position() const noexcept { return position_; }

   private:
    const RoaringBitmap* bitmap_;
    std::size_t position_ = 0;
  };

  struct Container {
    std::uint16_t key = 0;
    std::uint32_t cardinality = 0;
    std::vector<std::uint16_t> values;  // array form
    std::vector<std::uint64_t> bits;    // bitset form, 1024 words

    bool is_bitset() const noexcept { return !bits.empty(); }
    bool contains(std::uint32_t low) const;
    friend bool operator==(const Container&, const Container&) = default;
  };

 private:
  /// Container holding chunk `key`, or nullptr.
  const Container* find(std::size_t key) const;
  /// Appends set position `pos`, which must be >= every stored position.
  void push_back(std::size_t pos);
  /// Appends set positions [lo, hi), all >= every stored position.
  void push_back_range(std::size_t lo, std::size_t hi);
  Container& tail_container(std::uint16_t key);

  std::vector<Container> containers_;  // sorted by key, none empty
  std::size_t size_ = 0;
};

}  // namespace ltlbit
