#include "ltlbit/roaring_bitmap.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <optional>
#include <stdexcept>

namespace ltlbit {

namespace {

using Container = RoaringBitmap::Container;

constexpr std::size_t kBitsetWords = RoaringBitmap::kChunkBits / 64;
constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};
// Per-container header: key plus cardinality.
constexpr std::size_t kContainerHeaderBytes = 4;

void set_bit(std::vector<std::uint64_t>& bits, std::uint32_t low) {
  bits[low / 64] |= std::uint64_t{1} << (low % 64);
}

/// Sets bits [lo, hi) and returns how many were newly set.
std::uint32_t set_range(std::vector<std::uint64_t>& bits, std::uint32_t lo,
                        std::uint32_t hi) {
  std::uint32_t added = 0;
  while (lo < hi) {
    const std::uint32_t wi = lo / 64;
    const std::uint32_t end = std::min(hi, (wi + 1) * 64);
    const std::uint32_t n = end - lo;
    const std::uint64_t mask =
        (n == 64 ? kAllOnes : ((std::uint64_t{1} << n) - 1)) << (lo % 64);
    added += std::popcount(mask & ~bits[wi]);
    bits[wi] |= mask;
    lo = end;
  }
  return added;
}

void to_bitset(Container& c) {
  c.bits.assign(kBitsetWords, 0);
  for (std::uint16_t v : c.values) set_bit(c.bits, v);
  c.values.clear();
  c.values.shrink_to_fit();
}

void to_array(Container& c) {
  std::vector<std::uint16_t> values;
  values.reserve(c.cardinality);
  for (std::size_t wi = 0; wi < c.bits.size(); ++wi) {
    for (std::uint64_t w = c.bits[wi]; w != 0; w &= w - 1) {
      values.push_back(static_cast<std::uint16_t>(wi * 64 + std::countr_zero(w)));
    }
  }
  c.values = std::move(values);
  c.bits.clear();
  c.bits.shrink_to_fit();
}

void normalize(Container& c) {
  if (c.is_bitset() && c.cardinality <= RoaringBitmap::kArrayMax) {
    to_array(c);
  } else if (!c.is_bitset() && c.cardinality > RoaringBitmap::kArrayMax) {
    to_bitset(c);
  }
}

std::uint32_t popcount_all(const std::vector<std::uint64_t>& bits) {
  std::uint32_t n = 0;
  for (std::uint64_t w : bits) n += std::popcount(w);
  return n;
}

std::optional<std::uint32_t> next_set(const Container& c, std::uint32_t from) {
  if (from >= RoaringBitmap::kChunkBits) return std::nullopt;
  if (!c.is_bitset()) {
    auto it = std::lower_bound(c.values.begin(), c.values.end(), from);
    if (it == c.values.end()) return std::nullopt;
    return *it;
  }
  std::size_t wi = from / 64;
  std::uint64_t w = c.bits[wi] & (kAllOnes << (from % 64));
  while (true) {
    if (w != 0) return static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w));
    if (++wi == kBitsetWords) return std::nullopt;
    w = c.bits[wi];
  }
}

std::optional<std::uint32_t> next_clear(const Container& c, std::uint32_t from) {
  if (from >= RoaringBitmap::kChunkBits) return std::nullopt;
  if (!c.is_bitset()) {
    auto it = std::lower_bound(c.values.begin(), c.values.end(), from);
    std::uint32_t candidate = from;
    while (it != c.values.end() && *it == candidate) {
      ++it;
      ++candidate;
    }
    if (candidate >= RoaringBitmap::kChunkBits) return std::nullopt;
    return candidate;
  }
  std::size_t wi = from / 64;
  std::uint64_t w = ~c.bits[wi] & (kAllOnes << (from % 64));
  while (true) {
    if (w != 0) return static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w));
    if (++wi == kBitsetWords) return std::nullopt;
    w = ~c.bits[wi];
  }
}

/// Highest clear low value <= upto.
std::optional<std::uint32_t> last_clear(const Container& c, std::uint32_t upto) {
  if (!c.is_bitset()) {
    auto it = std::upper_bound(c.values.begin(), c.values.end(), upto);
    std::int64_t candidate = upto;
    while (it != c.values.begin() && *std::prev(it) == candidate) {
      --it;
      --candidate;
    }
    if (candidate < 0) return std::nullopt;
    return static_cast<std::uint32_t>(candidate);
  }
  std::size_t wi = upto / 64;
  const std::size_t top = upto % 64;
  std::uint64_t w = ~c.bits[wi] & (top == 63 ? kAllOnes : ((std::uint64_t{1} << (top + 1)) - 1));
  while (true) {
    if (w != 0) return static_cast<std::uint32_t>(wi * 64 + 63 - std::countl_zero(w));
    if (wi == 0) return std::nullopt;
    w = ~c.bits[--wi];
  }
}

std::uint32_t max_value(const Container& c) {
  if (!c.is_bitset()) return c.values.back();
  for (std::size_t wi = kBitsetWords; wi-- > 0;) {
    if (c.bits[wi] != 0) {
      return static_cast<std::uint32_t>(wi * 64 + 63 - std::countl_zero(c.bits[wi]));
    }
  }
  return 0;  // unreachable for non-empty containers
}

/// Calls fn(low) for each set low value in [lo, hi), ascending.
template <class Fn>
void for_each_set(const Container& c, std::uint32_t lo, std::uint32_t hi, Fn fn) {
  if (!c.is_bitset()) {
    auto it = std::lower_bound(c.values.begin(), c.values.end(), lo);
    for (; it != c.values.end() && *it < hi; ++it) fn(std::uint32_t{*it});
    return;
  }
  for (std::uint32_t wi = lo / 64; wi * 64 < hi; ++wi) {
    std::uint64_t w = c.bits[wi];
    if (wi == lo / 64) w &= kAllOnes << (lo % 64);
    for (; w != 0; w &= w - 1) {
      const std::uint32_t v = wi * 64 + std::countr_zero(w);
      if (v >= hi) return;
      fn(v);
    }
  }
}

Container intersect(const Container& a, const Container& b) {
  Container out;
  out.key = a.key;
  if (a.is_bitset() && b.is_bitset()) {
    out.bits.resize(kBitsetWords);
    for (std::size_t i = 0; i < kBitsetWords; ++i) out.bits[i] = a.bits[i] & b.bits[i];
    out.cardinality = popcount_all(out.bits);
  } else if (!a.is_bitset() && !b.is_bitset()) {
    std::set_intersection(a.values.begin(), a.values.end(), b.values.begin(),
                          b.values.end(), std::back_inserter(out.values));
    out.cardinality = static_cast<std::uint32_t>(out.values.size());
  } else {
    const Container& arr = a.is_bitset() ? b : a;
    const Container& set = a.is_bitset() ? a : b;
    for (std::uint16_t v : arr.values) {
      if (set.contains(v)) out.values.push_back(v);
    }
    out.cardinality = static_cast<std::uint32_t>(out.values.size());
  }
  normalize(out);
  return out;
}

Container unite(const Container& a, const Container& b) {
  Container out;
  out.key = a.key;
  if (!a.is_bitset() && !b.is_bitset()) {
    std::set_union(a.values.begin(), a.values.end(), b.values.begin(),
                   b.values.end(), std::back_inserter(out.values));
    out.cardinality = static_cast<std::uint32_t>(out.values.size());
  } else {
    out.bits.assign(kBitsetWords, 0);
    for (const Container* c : {&a, &b}) {
      if (c->is_bitset()) {
        for (std::size_t i = 0; i < kBitsetWords; ++i) out.bits[i] |= c->bits[i];
      } else {
        for (std::uint16_t v : c->values) set_bit(out.bits, v);
      }
    }
    out.cardinality = popcount_all(out.bits);
  }
  normalize(out);
  return out;
}

/// Complement of `c` restricted to [0, limit). `c` may be null (empty chunk).
Container complement(const Container* c, std::uint16_t key, std::uint32_t limit) {
  Container out;
  out.key = key;
  out.bits.assign(kBitsetWords, 0);
  set_range(out.bits, 0, limit);
  if (c != nullptr) {
    if (c->is_bitset()) {
      for (std::size_t i = 0; i < kBitsetWords; ++i) out.bits[i] &= ~c->bits[i];
    } else {
      for (std::uint16_t v : c->values) {
        out.bits[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      }
    }
  }
  out.cardinality = popcount_all(out.bits);
  normalize(out);
  return out;
}

}  // namespace

bool RoaringBitmap::Container::contains(std::uint32_t low) const {
  if (is_bitset()) return (bits[low / 64] >> (low % 64)) & 1;
  return std::binary_search(values.begin(), values.end(), low);
}

const RoaringBitmap::Container* RoaringBitmap::find(std::size_t key) const {
  auto it = std::lower_bound(
      containers_.begin(), containers_.end(), key,
      [](const Container& c, std::size_t k) { return c.key < k; });
  if (it == containers_.end() || it->key != key) return nullptr;
  return &*it;
}

bool RoaringBitmap::get(std::size_t i) const {
  if (i >= size_) {
    throw std::out_of_range("get: index " + std::to_string(i) +
                            " out of range for length " + std::to_string(size_));
  }
  const Container* c = find(i >> 16);
  return c != nullptr && c->contains(i & 0xFFFF);
}

Position RoaringBitmap::next(bool v, std::size_t from) const {
  if (from >= size_) return kNoPosition;
  if (v) {
    auto it = std::lower_bound(
        containers_.begin(), containers_.end(), from >> 16,
        [](const Container& c, std::size_t k) { return c.key < k; });
    for (; it != containers_.end(); ++it) {
      const std::size_t base = std::size_t{it->key} << 16;
      const std::uint32_t lo = base >= from ? 0 : static_cast<std::uint32_t>(from - base);
      if (auto low = next_set(*it, lo)) return base + *low;
    }
    return kNoPosition;
  }
  std::size_t candidate = from;
  while (candidate < size_) {
    const std::size_t key = candidate >> 16;
    const Container* c = find(key);
    if (c == nullptr) return candidate;
    if (auto low = next_clear(*c, candidate & 0xFFFF)) {
      const std::size_t pos = (key << 16) + *low;
      return pos < size_ ? Position{pos} : kNoPosition;
    }
    candidate = (key + 1) << 16;
  }
  return kNoPosition;
}

Position RoaringBitmap::last(bool v) const {
  if (v) {
    if (containers_.empty()) return kNoPosition;
    const Container& c = containers_.back();
    return (std::size_t{c.key} << 16) + max_value(c);
  }
  if (size_ == 0) return kNoPosition;
  std::size_t candidate = size_ - 1;
  while (true) {
    const std::size_t key = candidate >> 16;
    const Container* c = find(key);
    if (c == nullptr) return candidate;
    if (auto low = last_clear(*c, candidate & 0xFFFF)) return (key << 16) + *low;
    if (key == 0) return kNoPosition;
    candidate = (key << 16) - 1;
  }
}

std::size_t RoaringBitmap::payload_bytes() const noexcept {
  std::size_t bytes = 0;
  for (const Container& c : containers_) {
    bytes += kContainerHeaderBytes +
             (c.is_bitset() ? kBitsetWords * sizeof(std::uint64_t)
                            : c.values.size() * sizeof(std::uint16_t));
  }
  return bytes;
}

std::size_t RoaringBitmap::cardinality() const noexcept {
  std::size_t n = 0;
  for (const Container& c : containers_) n += c.cardinality;
  return n;
}

std::size_t RoaringBitmap::bitset_container_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      containers_.begin(), containers_.end(),
      [](const Container& c) { return c.is_bitset(); }));
}

RoaringBitmap::Container& RoaringBitmap::tail_container(std::uint16_t key) {
  if (containers_.empty() || containers_.back().key != key) {
    Container c;
    c.key = key;
    containers_.push_back(std::move(c));
  }
  return containers_.back();
}

void RoaringBitmap::push_back(std::size_t pos) {
  Container& c = tail_container(static_cast<std::uint16_t>(pos >> 16));
  const auto low = static_cast<std::uint16_t>(pos & 0xFFFF);
  if (c.is_bitset()) {
    set_bit(c.bits, low);
  } else if (c.cardinality < kArrayMax) {
    c.values.push_back(low);
  } else {
    to_bitset(c);
    set_bit(c.bits, low);
  }
  ++c.cardinality;
}

void RoaringBitmap::push_back_range(std::size_t lo, std::size_t hi) {
  while (lo < hi) {
    const std::size_t key = lo >> 16;
    const std::size_t chunk_end = std::min(hi, (key + 1) << 16);
    Container& c = tail_container(static_cast<std::uint16_t>(key));
    const auto first = static_cast<std::uint32_t>(lo - (key << 16));
    const auto stop = static_cast<std::uint32_t>(chunk_end - (key << 16));
    const std::uint32_t count = stop - first;
    if (!c.is_bitset() && c.cardinality + count <= kArrayMax) {
      for (std::uint32_t v = first; v < stop; ++v) {
        c.values.push_back(static_cast<std::uint16_t>(v));
      }
      c.cardinality += count;
    } else {
      if (!c.is_bitset()) to_bitset(c);
      c.cardinality += set_range(c.bits, first, stop);
    }
    lo = chunk_end;
  }
}

void RoaringBitmap::append(bool v, std::size_t count) {
  if (count > kMaxSize - size_) {
    throw std::length_error("roaring bitmap length limit exceeded");
  }
  if (v) push_back_range(size_, size_ + count);
  size_ += count;
}

void RoaringBitmap::append_range(const RoaringBitmap& src, std::size_t start,
                                 std::size_t count) {
  if (start > src.size_ || count > src.size_ - start) {
    throw std::out_of_range("append_range: source range out of bounds");
  }
  if (count > kMaxSize - size_) {
    throw std::length_error("roaring bitmap length limit exceeded");
  }
  if (&src == this) {
    const RoaringBitmap copy = src;
    append_range(copy, start, count);
    return;
  }
  const std::size_t stop = start + count;
  const std::size_t base = size_;
  for (const Container& c : src.containers_) {
    const std::size_t chunk = std::size_t{c.key} << 16;
    if (chunk + kChunkBits <= start) continue;
    if (chunk >= stop) break;
    const auto lo = static_cast<std::uint32_t>(start > chunk ? start - chunk : 0);
    const auto hi = static_cast<std::uint32_t>(std::min(stop - chunk, kChunkBits));
    for_each_set(c, lo, hi, [&](std::uint32_t low) {
      push_back(base + chunk + low - start);
    });
  }
  size_ += count;
}

void RoaringBitmap::pop_front() {
  if (size_ == 0) throw std::out_of_range("pop_front on empty bitmap");
  RoaringBitmap shifted;
  shifted.append_range(*this, 1, size_ - 1);
  *this = std::move(shifted);
}

RoaringBitmap operator&(const RoaringBitmap& a, const RoaringBitmap& b) {
  if (a.size_ != b.size_) throw LengthMismatch(a.size_, b.size_);
  RoaringBitmap out;
  out.size_ = a.size_;
  auto ia = a.containers_.begin();
  auto ib = b.containers_.begin();
  while (ia != a.containers_.end() && ib != b.containers_.end()) {
    if (ia->key < ib->key) {
      ++ia;
    } else if (ib->key < ia->key) {
      ++ib;
    } else {
      Container c = intersect(*ia, *ib);
      if (c.cardinality > 0) out.containers_.push_back(std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

RoaringBitmap operator|(const RoaringBitmap& a, const RoaringBitmap& b) {
  if (a.size_ != b.size_) throw LengthMismatch(a.size_, b.size_);
  RoaringBitmap out;
  out.size_ = a.size_;
  auto ia = a.containers_.begin();
  auto ib = b.containers_.begin();
  while (ia != a.containers_.end() || ib != b.containers_.end()) {
    if (ib == b.containers_.end() || (ia != a.containers_.end() && ia->key < ib->key)) {
      out.containers_.push_back(*ia++);
    } else if (ia == a.containers_.end() || ib->key < ia->key) {
      out.containers_.push_back(*ib++);
    } else {
      out.containers_.push_back(unite(*ia, *ib));
      ++ia;
      ++ib;
    }
  }
  return out;
}

RoaringBitmap operator~(const RoaringBitmap& a) {
  RoaringBitmap out;
  out.size_ = a.size_;
  if (a.size_ == 0) return out;
  const std::size_t last_key = (a.size_ - 1) >> 16;
  auto it = a.containers_.begin();
  for (std::size_t key = 0; key <= last_key; ++key) {
    const Container* c = nullptr;
    if (it != a.containers_.end() && it->key == key) c = &*it++;
    const std::size_t limit =
        std::min(RoaringBitmap::kChunkBits, a.size_ - (key << 16));
    Container flipped = complement(c, static_cast<std::uint16_t>(key),
                                   static_cast<std::uint32_t>(limit));
    if (flipped.cardinality > 0) out.containers_.push_back(std::move(flipped));
  }
  return out;
}

std::string RoaringBitmap::validate() const {
  for (std::size_t i = 0; i < containers_.size(); ++i) {
    const Container& c = containers_[i];
    const std::string where = "container " + std::to_string(c.key);
    if (i > 0 && containers_[i - 1].key >= c.key) return where + ": keys not sorted";
    if (c.cardinality == 0) return where + ": empty container";
    if (c.is_bitset()) {
      if (c.bits.size() != kBitsetWords) return where + ": bad bitset size";
      if (!c.values.empty()) return where + ": both forms populated";
      if (popcount_all(c.bits) != c.cardinality) return where + ": bad cardinality";
      if (c.cardinality <= kArrayMax) return where + ": small bitset container";
    } else {
      if (c.values.size() != c.cardinality) return where + ": bad cardinality";
      if (c.cardinality > kArrayMax) return where + ": oversized array container";
      if (std::adjacent_find(c.values.begin(), c.values.end(),
                             std::greater_equal<>()) != c.values.end()) {
        return where + ": array not strictly sorted";
      }
    }
  }
  if (!containers_.empty() && *last(true) >= size_) {
    return "set position beyond length";
  }
  return {};
}

}  // namespace ltlbit
