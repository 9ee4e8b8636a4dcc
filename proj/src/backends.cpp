#include "ltlbit/backends.hpp"

namespace ltlbit {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kRaw:
      return RawBitmap::kName;
    case Backend::kRle64:
      return RleBitmap::kName;
    case Backend::kRoaring:
      return RoaringBitmap::kName;
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  for (Backend b : kAllBackends) {
    if (backend_name(b) == name) return b;
  }
  throw Error("unknown backend '" + std::string(name) +
              "' (expected raw, rle64 or roaring)");
}

}  // namespace ltlbit
