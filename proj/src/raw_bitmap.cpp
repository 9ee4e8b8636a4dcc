#include "ltlbit/raw_bitmap.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "ltlbit/kernels.hpp"

namespace ltlbit {

namespace {

constexpr std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void check_lengths(const RawBitmap& a, const RawBitmap& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
}

}  // namespace

RawBitmap RawBitmap::from_words(std::vector<std::uint64_t> words,
                                std::size_t size) {
  if (words.size() < words_for(size)) {
    throw std::invalid_argument("from_words: too few words for size");
  }
  RawBitmap b;
  words.resize(words_for(size));
  b.words_ = std::move(words);
  b.size_ = size;
  b.clear_padding();
  return b;
}

bool RawBitmap::get(std::size_t i) const {
  if (i >= size_) {
    throw std::out_of_range("get: index " + std::to_string(i) +
                            " out of range for length " +
                            std::to_string(size_));
  }
  return (words_[i / 64] >> (i % 64)) & 1;
}

Position RawBitmap::next(bool v, std::size_t from) const {
  if (from >= size_) return kNoPosition;
  std::size_t wi = from / 64;
  std::uint64_t w = v ? words_[wi] : ~words_[wi];
  w &= ~std::uint64_t{0} << (from % 64);
  while (true) {
    if (w != 0) {
      const std::size_t pos = wi * 64 + std::countr_zero(w);
      return pos < size_ ? Position{pos} : kNoPosition;
    }
    if (++wi == words_.size()) return kNoPosition;
    w = v ? words_[wi] : ~words_[wi];
  }
}

Position RawBitmap::last(bool v) const {
  for (std::size_t wi = words_.size(); wi-- > 0;) {
    std::uint64_t w = v ? words_[wi] : ~words_[wi];
    if (wi + 1 == words_.size()) w &= low_mask(size_ - wi * 64);
    if (w != 0) return wi * 64 + 63 - std::countl_zero(w);
  }
  return kNoPosition;
}

void RawBitmap::append_bits(std::uint64_t bits, std::size_t count) {
  if (count == 0) return;
  const std::size_t offset = size_ % 64;
  if (offset == 0) {
    words_.push_back(bits);
  } else {
    words_.back() |= bits << offset;
    if (offset + count > 64) words_.push_back(bits >> (64 - offset));
  }
  size_ += count;
}

void RawBitmap::append(bool v, std::size_t count) {
  if (count == 0) return;
  const std::size_t offset = size_ % 64;
  if (offset != 0) {
    const std::size_t head = std::min(count, 64 - offset);
    if (v) words_.back() |= low_mask(head) << offset;
    size_ += head;
    count -= head;
  }
  if (count == 0) return;
  const std::size_t full = count / 64;
  words_.resize(words_.size() + full, v ? ~std::uint64_t{0} : 0);
  size_ += full * 64;
  const std::size_t rest = count % 64;
  if (rest != 0) {
    words_.push_back(v ? low_mask(rest) : 0);
    size_ += rest;
  }
}

std::uint64_t RawBitmap::word_at(std::size_t pos) const noexcept {
  const std::size_t wi = pos / 64;
  const std::size_t offset = pos % 64;
  std::uint64_t w = words_[wi] >> offset;
  if (offset != 0 && wi + 1 < words_.size()) {
    w |= words_[wi + 1] << (64 - offset);
  }
  return w;
}

void RawBitmap::append_range(const RawBitmap& src, std::size_t start,
                             std::size_t count) {
  if (start > src.size_ || count > src.size_ - start) {
    throw std::out_of_range("append_range: source range out of bounds");
  }
  if (&src == this) {
    const RawBitmap copy = src;
    append_range(copy, start, count);
    return;
  }
  words_.reserve(words_for(size_ + count));
  std::size_t pos = start;
  const std::size_t stop = start + count;
  while (pos < stop) {
    const std::size_t n = std::min<std::size_t>(64, stop - pos);
    append_bits(src.word_at(pos) & low_mask(n), n);
    pos += n;
  }
}

void RawBitmap::pop_front() {
  if (size_ == 0) throw std::out_of_range("pop_front on empty bitmap");
  std::vector<std::uint64_t> shifted(words_.size());
  kernels::parallel::shift_down_one(words_, shifted);
  words_ = std::move(shifted);
  --size_;
  if (words_.size() > words_for(size_)) words_.pop_back();
}

void RawBitmap::clear_padding() noexcept {
  if (size_ % 64 != 0) words_.back() &= low_mask(size_ % 64);
}

RawBitmap operator&(const RawBitmap& a, const RawBitmap& b) {
  check_lengths(a, b);
  RawBitmap out;
  out.size_ = a.size_;
  out.words_.resize(a.words_.size());
  kernels::parallel::and_words(a.words_, b.words_, out.words_);
  return out;
}

RawBitmap operator|(const RawBitmap& a, const RawBitmap& b) {
  check_lengths(a, b);
  RawBitmap out;
  out.size_ = a.size_;
  out.words_.resize(a.words_.size());
  kernels::parallel::or_words(a.words_, b.words_, out.words_);
  return out;
}

RawBitmap operator~(const RawBitmap& a) {
  RawBitmap out;
  out.size_ = a.size_;
  out.words_.resize(a.words_.size());
  kernels::parallel::not_words(a.words_, out.words_);
  out.clear_padding();
  return out;
}

}  // namespace ltlbit
