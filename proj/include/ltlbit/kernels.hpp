#pragma once

// Word-level kernels behind RawBitmap and ground-bitmap construction.
//
// `serial` holds the reference loops; `parallel` holds the OpenMP versions
// used in production. Both namespaces expose identical signatures and must
// produce identical output; tests and the kernel benchmark compare them.

#include <cstddef>
#include <cstdint>
#include <span>

namespace ltlbit::kernels {

/// Below this many words the parallel kernels call the serial loops.
inline constexpr std::size_t kParallelMinWords = std::size_t{1} << 14;

namespace serial {

void and_words(std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void or_words(std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void not_words(std::span<const std::uint64_t> a, std::span<std::uint64_t> out);

/// out[i] = src[i] >> 1 | src[i + 1] << 63, i.e. drops logical bit 0.
void shift_down_one(std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> out);

/// Transposes row-major event cells (one byte per variable, 0 or 1) into
/// one packed bit column per variable. `out` holds `num_vars` columns of
/// `words_per_column` words each and must be zero-filled. Returns the number
/// of event rows read, which equals `num_events`.
std::size_t transpose_events(std::span<const std::uint8_t> cells,
                             std::size_t num_events, std::size_t num_vars,
                             std::size_t words_per_column,
                             std::span<std::uint64_t> out);

}  // namespace serial

namespace parallel {

void and_words(std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void or_words(std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void not_words(std::span<const std::uint64_t> a, std::span<std::uint64_t> out);
void shift_down_one(std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> out);
std::size_t transpose_events(std::span<const std::uint8_t> cells,
                             std::size_t num_events, std::size_t num_vars,
                             std::size_t words_per_column,
                             std::span<std::uint64_t> out);

}  // namespace parallel

/// Number of threads the parallel kernels may use.
int max_threads();

}  // namespace ltlbit::kernels
