#include "ltlbit/rle_bitmap.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ltlbit {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

constexpr std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? kAllOnes : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

/// Sequential reader over the encoded words of a bitmap, one group at a time.
/// Exposes either a pending fill run or a pending dirty word.
class RleRunReader {
 public:
  explicit RleRunReader(const RleBitmap& b) : stream_(&b.stream_) { load(); }

  bool done() const noexcept { return fills_ == 0 && dirty_ == 0; }
  bool in_fill() const noexcept { return fills_ > 0; }
  bool fill_value() const noexcept { return fill_; }
  std::uint64_t fill_run() const noexcept { return fills_; }
  std::uint64_t dirty_run() const noexcept { return dirty_; }
  std::uint64_t dirty_word() const noexcept { return (*stream_)[next_dirty_]; }

  void skip_fill(std::uint64_t count) {
    fills_ -= count;
    if (done()) advance_group();
  }
  void skip_dirty() {
    ++next_dirty_;
    --dirty_;
    if (done()) advance_group();
  }

 private:
  void load() {
    while (marker_ < stream_->size()) {
      const std::uint64_t m = (*stream_)[marker_];
      fill_ = RleBitmap::fill_value(m);
      fills_ = RleBitmap::fill_words(m);
      dirty_ = RleBitmap::dirty_words(m);
      next_dirty_ = marker_ + 1;
      if (!done()) return;
      marker_ = next_dirty_;
    }
  }
  void advance_group() {
    marker_ += 1 + RleBitmap::dirty_words((*stream_)[marker_]);
    load();
  }

  const std::vector<std::uint64_t>* stream_;
  std::size_t marker_ = 0;
  std::size_t next_dirty_ = 0;
  std::uint64_t fills_ = 0;
  std::uint64_t dirty_ = 0;
  bool fill_ = false;
};

RleBitmap RleBitmap::from_words(std::span<const std::uint64_t> words,
                                std::size_t size) {
  if (words.size() * 64 < size) {
    throw std::invalid_argument("from_words: too few words for size");
  }
  RleBitmap b;
  const std::size_t full = size / 64;
  for (std::size_t i = 0; i < full; ++i) b.append_full_word(words[i]);
  if (size % 64 != 0) b.append_bits(words[full] & low_mask(size % 64), size % 64);
  return b;
}

std::size_t RleBitmap::marker_count() const noexcept {
  std::size_t n = 0;
  for (std::size_t m = 0; m < stream_.size(); m += 1 + dirty_words(stream_[m])) {
    ++n;
  }
  return n;
}

void RleBitmap::append_fill_words(bool v, std::uint64_t count) {
  while (count > 0) {
    if (!stream_.empty()) {
      std::uint64_t& m = stream_[last_marker_];
      const std::uint64_t fills = fill_words(m);
      if (dirty_words(m) == 0 && (fills == 0 || fill_value(m) == v) &&
          fills < kMaxFillWords) {
        const std::uint64_t take = std::min(count, kMaxFillWords - fills);
        m = make_marker(v, fills + take, 0);
        full_words_ += take;
        count -= take;
        continue;
      }
    }
    last_marker_ = stream_.size();
    stream_.push_back(make_marker(false, 0, 0));
  }
}

void RleBitmap::append_dirty_word(std::uint64_t w) {
  if (stream_.empty() || dirty_words(stream_[last_marker_]) == kMaxDirtyWords) {
    last_marker_ = stream_.size();
    stream_.push_back(make_marker(false, 0, 0));
  }
  stream_[last_marker_] += std::uint64_t{1} << 33;
  stream_.push_back(w);
  ++full_words_;
}

void RleBitmap::append_full_word(std::uint64_t w) {
  if (w == 0) {
    append_fill_words(false, 1);
  } else if (w == kAllOnes) {
    append_fill_words(true, 1);
  } else {
    append_dirty_word(w);
  }
}

void RleBitmap::append_bits(std::uint64_t bits, std::size_t count) {
  if (count == 0) return;
  const std::size_t space = 64 - tail_bits_;
  tail_ |= bits << tail_bits_;
  if (count < space) {
    tail_bits_ += count;
    return;
  }
  append_full_word(tail_);
  tail_ = space == 64 ? 0 : bits >> space;
  tail_bits_ = count - space;
}

void RleBitmap::append(bool v, std::size_t count) {
  if (count == 0) return;
  if (tail_bits_ > 0) {
    const std::size_t head = std::min(count, 64 - tail_bits_);
    append_bits(v ? low_mask(head) : 0, head);
    count -= head;
  }
  if (count >= 64) {
    append_fill_words(v, count / 64);
    count %= 64;
  }
  append_bits(v ? low_mask(count) : 0, count);
}

void RleBitmap::append_range(const RleBitmap& src, std::size_t start,
                             std::size_t count) {
  if (start > src.size() || count > src.size() - start) {
    throw std::out_of_range("append_range: source range out of bounds");
  }
  if (&src == this) {
    const RleBitmap copy = src;
    append_range(copy, start, count);
    return;
  }
  std::size_t pos = start;
  const std::size_t stop = start + count;
  std::size_t word = 0;  // absolute word index of the reader's current word
  RleRunReader reader(src);
  while (pos < stop && !reader.done()) {
    if (reader.in_fill()) {
      const std::size_t run_end = (word + reader.fill_run()) * 64;
      if (run_end <= pos) {
        word += reader.fill_run();
        reader.skip_fill(reader.fill_run());
        continue;
      }
      const std::size_t n = std::min(run_end, stop) - pos;
      append(reader.fill_value(), n);
      pos += n;
      word += reader.fill_run();
      reader.skip_fill(reader.fill_run());
    } else {
      const std::size_t word_end = (word + 1) * 64;
      if (word_end > pos) {
        const std::size_t n = std::min(word_end, stop) - pos;
        append_bits((reader.dirty_word() >> (pos - word * 64)) & low_mask(n), n);
        pos += n;
      }
      ++word;
      reader.skip_dirty();
    }
  }
  if (pos < stop) {
    const std::size_t n = stop - pos;
    const std::size_t offset = pos - src.full_words_ * 64;
    append_bits((src.tail_ >> offset) & low_mask(n), n);
  }
}

void RleBitmap::pop_front() {
  if (empty()) throw std::out_of_range("pop_front on empty bitmap");
  RleBitmap shifted;
  shifted.append_range(*this, 1, size() - 1);
  *this = std::move(shifted);
}

Position RleBitmap::Scanner::next(bool v, std::size_t from) {
  const RleBitmap& b = *bitmap_;
  const std::vector<std::uint64_t>& s = b.stream_;
  if (from >= b.size()) {
    position_ = b.size();
    return kNoPosition;
  }
  if (from < group_word_ * 64) {
    marker_ = 0;
    group_word_ = 0;
  }
  std::size_t pos = from;
  for (; marker_ < s.size();
       group_word_ += fill_words(s[marker_]) + dirty_words(s[marker_]),
       marker_ += 1 + dirty_words(s[marker_])) {
    const std::uint64_t m = s[marker_];
    const std::uint64_t dirty_start = group_word_ + fill_words(m);
    const std::uint64_t group_end = dirty_start + dirty_words(m);
    if (pos / 64 >= group_end) continue;
    if (pos / 64 < dirty_start) {
      if (fill_value(m) == v) {
        position_ = pos;
        return pos;
      }
      pos = dirty_start * 64;
    }
    for (std::uint64_t wi = pos / 64; wi < group_end; ++wi) {
      std::uint64_t w = s[marker_ + 1 + (wi - dirty_start)];
      if (!v) w = ~w;
      w &= kAllOnes << (pos % 64);
      if (w != 0) {
        position_ = wi * 64 + std::countr_zero(w);
        return position_;
      }
      pos = (wi + 1) * 64;
    }
  }
  if (b.tail_bits_ > 0) {
    const std::size_t offset = pos - b.full_words_ * 64;
    std::uint64_t w = (v ? b.tail_ : ~b.tail_) & low_mask(b.tail_bits_);
    w &= kAllOnes << offset;
    if (w != 0) {
      position_ = b.full_words_ * 64 + std::countr_zero(w);
      return position_;
    }
  }
  position_ = b.size();
  return kNoPosition;
}

Position RleBitmap::next(bool v, std::size_t from) const {
  Scanner scanner(*this);
  return scanner.next(v, from);
}

bool RleBitmap::get(std::size_t i) const {
  if (i >= size()) {
    throw std::out_of_range("get: index " + std::to_string(i) +
                            " out of range for length " +
                            std::to_string(size()));
  }
  return next(true, i) == i;
}

Position RleBitmap::last(bool v) const {
  // The stream cannot be walked backwards, so record the final hit of one
  // forward pass.
  Position found;
  std::uint64_t word = 0;
  for (std::size_t mi = 0; mi < stream_.size();) {
    const std::uint64_t m = stream_[mi];
    word += fill_words(m);
    if (fill_words(m) > 0 && fill_value(m) == v) found = word * 64 - 1;
    for (std::uint64_t k = 0; k < dirty_words(m); ++k, ++word) {
      const std::uint64_t w = v ? stream_[mi + 1 + k] : ~stream_[mi + 1 + k];
      if (w != 0) found = word * 64 + 63 - std::countl_zero(w);
    }
    mi += 1 + dirty_words(m);
  }
  if (tail_bits_ > 0) {
    const std::uint64_t w = (v ? tail_ : ~tail_) & low_mask(tail_bits_);
    if (w != 0) found = full_words_ * 64 + 63 - std::countl_zero(w);
  }
  return found;
}

template <class WordOp>
RleBitmap RleBitmap::merge(const RleBitmap& a, const RleBitmap& b, WordOp op) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  RleBitmap out;
  RleRunReader ra(a);
  RleRunReader rb(b);
  // Emits `count` words of op(fill, x) for the dirty words x of `dirty`.
  auto fill_against_dirty = [&](bool fill, RleRunReader& dirty,
                                std::uint64_t count) {
    const std::uint64_t f = fill ? kAllOnes : 0;
    const std::uint64_t on_zero = op(f, 0);
    const std::uint64_t on_ones = op(f, kAllOnes);
    if (on_zero == on_ones) {
      out.append_fill_words(on_zero != 0, count);
      for (std::uint64_t k = 0; k < count; ++k) dirty.skip_dirty();
      return;
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      out.append_full_word(op(f, dirty.dirty_word()));
      dirty.skip_dirty();
    }
  };
  while (!ra.done() && !rb.done()) {
    if (ra.in_fill() && rb.in_fill()) {
      const std::uint64_t n = std::min(ra.fill_run(), rb.fill_run());
      const std::uint64_t w =
          op(ra.fill_value() ? kAllOnes : 0, rb.fill_value() ? kAllOnes : 0);
      out.append_fill_words(w != 0, n);
      ra.skip_fill(n);
      rb.skip_fill(n);
    } else if (ra.in_fill()) {
      const std::uint64_t n = std::min(ra.fill_run(), rb.dirty_run());
      const bool fill = ra.fill_value();
      ra.skip_fill(n);
      fill_against_dirty(fill, rb, n);
    } else if (rb.in_fill()) {
      const std::uint64_t n = std::min(rb.fill_run(), ra.dirty_run());
      const bool fill = rb.fill_value();
      rb.skip_fill(n);
      // Operands of and/or commute, so the fill may stand on either side.
      fill_against_dirty(fill, ra, n);
    } else {
      const std::uint64_t n = std::min(ra.dirty_run(), rb.dirty_run());
      for (std::uint64_t k = 0; k < n; ++k) {
        out.append_full_word(op(ra.dirty_word(), rb.dirty_word()));
        ra.skip_dirty();
        rb.skip_dirty();
      }
    }
  }
  out.tail_ = op(a.tail_, b.tail_) & low_mask(a.tail_bits_);
  out.tail_bits_ = a.tail_bits_;
  return out;
}

RleBitmap operator&(const RleBitmap& a, const RleBitmap& b) {
  return RleBitmap::merge(a, b, [](std::uint64_t x, std::uint64_t y) {
    return x & y;
  });
}

RleBitmap operator|(const RleBitmap& a, const RleBitmap& b) {
  return RleBitmap::merge(a, b, [](std::uint64_t x, std::uint64_t y) {
    return x | y;
  });
}

RleBitmap operator~(const RleBitmap& a) {
  RleBitmap out = a;
  for (std::size_t mi = 0; mi < out.stream_.size();) {
    std::uint64_t& m = out.stream_[mi];
    if (RleBitmap::fill_words(m) > 0) m ^= 1;
    const std::uint64_t dirty = RleBitmap::dirty_words(m);
    for (std::uint64_t k = 0; k < dirty; ++k) {
      out.stream_[mi + 1 + k] = ~out.stream_[mi + 1 + k];
    }
    mi += 1 + dirty;
  }
  out.tail_ = ~out.tail_ & low_mask(out.tail_bits_);
  return out;
}

bool operator==(const RleBitmap& a, const RleBitmap& b) noexcept {
  return a.full_words_ == b.full_words_ && a.tail_bits_ == b.tail_bits_ &&
         a.tail_ == b.tail_ && a.stream_ == b.stream_;
}

std::string RleBitmap::validate() const {
  std::uint64_t words = 0;
  std::size_t last = 0;
  bool have_prev = false;
  std::uint64_t prev = 0;
  for (std::size_t mi = 0; mi < stream_.size();) {
    const std::uint64_t m = stream_[mi];
    const std::uint64_t fills = fill_words(m);
    const std::uint64_t dirty = dirty_words(m);
    const std::string where = "marker at " + std::to_string(mi);
    if (mi + 1 + dirty > stream_.size()) return where + ": dirty run overflows";
    if (fills == 0 && dirty == 0) return where + ": empty group";
    if (fills == 0 && fill_value(m)) return where + ": fill bit set on no fill";
    for (std::uint64_t k = 0; k < dirty; ++k) {
      const std::uint64_t w = stream_[mi + 1 + k];
      if (w == 0 || w == kAllOnes) return where + ": clean word stored dirty";
    }
    if (have_prev && dirty_words(prev) == 0) {
      const bool prev_full = fill_words(prev) == kMaxFillWords;
      if (fills > 0 && fill_value(prev) == fill_value(m) && !prev_full) {
        return where + ": fill run not merged into previous group";
      }
      if (fills == 0) return where + ": dirty run not merged into previous group";
    }
    words += fills + dirty;
    last = mi;
    have_prev = true;
    prev = m;
    mi += 1 + dirty;
  }
  if (words != full_words_) return "word count does not match size";
  if (!stream_.empty() && last != last_marker_) return "stale last-marker index";
  if (tail_bits_ >= 64) return "tail overflow";
  if ((tail_ & ~low_mask(tail_bits_)) != 0) return "tail padding not zero";
  return {};
}

}  // namespace ltlbit
