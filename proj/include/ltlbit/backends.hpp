#pragma once

#include <array>
#include <string>
#include <string_view>
#include <type_traits>

#include "ltlbit/raw_bitmap.hpp"
#include "ltlbit/rle_bitmap.hpp"
#include "ltlbit/roaring_bitmap.hpp"

namespace ltlbit {

static_assert(BitmapBackend<RawBitmap>);
static_assert(BitmapBackend<RleBitmap>);
static_assert(BitmapBackend<RoaringBitmap>);

enum class Backend { kRaw, kRle64, kRoaring };

inline constexpr std::array<Backend, 3> kAllBackends = {
    Backend::kRaw, Backend::kRle64, Backend::kRoaring};

std::string_view backend_name(Backend b);

/// Accepts "raw", "rle64", "roaring"; throws ltlbit::Error otherwise.
Backend parse_backend(std::string_view name);

template <class T>
struct BackendTag {
  using type = T;
};

/// Invokes fn(BackendTag<B>{}) with the bitmap type selected by `backend`.
template <class Fn>
decltype(auto) with_backend(Backend backend, Fn&& fn) {
  switch (backend) {
    case Backend::kRaw:
      return fn(BackendTag<RawBitmap>{});
    case Backend::kRle64:
      return fn(BackendTag<RleBitmap>{});
    case Backend::kRoaring:
      return fn(BackendTag<RoaringBitmap>{});
  }
  throw Error("unknown backend");
}

}  // namespace ltlbit
