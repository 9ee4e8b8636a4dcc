#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "ltlbit/bitmap.hpp"

namespace ltlbit {

/// Ground bitmaps B_p for the atomic propositions of one trace. Every bound
/// bitmap has exactly `trace_length()` bits.
template <BitmapBackend B>
class GroundEnv {
 public:
  explicit GroundEnv(std::size_t trace_length = 0)
      : trace_length_(trace_length) {}

  std::size_t trace_length() const noexcept { return trace_length_; }

  void bind(std::string name, B bitmap) {
    if (bitmap.size() != trace_length_) {
      throw LengthMismatch(bitmap.size(), trace_length_);
    }
    bindings_.insert_or_assign(std::move(name), std::move(bitmap));
  }

  const B* find(std::string_view name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, B, std::less<>>& bindings() const noexcept {
    return bindings_;
  }

  std::size_t payload_bytes() const {
    std::size_t total = 0;
    for (const auto& [name, b] : bindings_) total += b.payload_bytes();
    return total;
  }

 private:
  std::size_t trace_length_;
  std::map<std::string, B, std::less<>> bindings_;
};

}  // namespace ltlbit
