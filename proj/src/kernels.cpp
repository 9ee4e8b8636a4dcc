#include "ltlbit/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace ltlbit::kernels {

namespace serial {

void and_words(std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

void or_words(std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] | b[i];
}

void not_words(std::span<const std::uint64_t> a, std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ~a[i];
}

void shift_down_one(std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> out) {
  if (src.empty()) return;
  const std::size_t n = src.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = (src[i] >> 1) | (src[i + 1] << 63);
  }
  out[n - 1] = src[n - 1] >> 1;
}

std::size_t transpose_events(std::span<const std::uint8_t> cells,
                             std::size_t num_events, std::size_t num_vars,
                             std::size_t words_per_column,
                             std::span<std::uint64_t> out) {
  std::size_t visited = 0;
  for (std::size_t e = 0; e < num_events; ++e, ++visited) {
    const std::uint8_t* row = cells.data() + e * num_vars;
    const std::size_t word = e / 64;
    const unsigned shift = e % 64;
    for (std::size_t v = 0; v < num_vars; ++v) {
      out[v * words_per_column + word] |= std::uint64_t{row[v]} << shift;
    }
  }
  return visited;
}

}  // namespace serial

namespace parallel {

namespace {
// OpenMP wants signed loop counters.
inline std::ptrdiff_t ssize(std::size_t n) {
  return static_cast<std::ptrdiff_t>(n);
}
}  // namespace

void and_words(std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  if (out.size() < kParallelMinWords) return serial::and_words(a, b, out);
  const std::ptrdiff_t n = ssize(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

void or_words(std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  if (out.size() < kParallelMinWords) return serial::or_words(a, b, out);
  const std::ptrdiff_t n = ssize(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

void not_words(std::span<const std::uint64_t> a, std::span<std::uint64_t> out) {
  if (out.size() < kParallelMinWords) return serial::not_words(a, out);
  const std::ptrdiff_t n = ssize(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = ~a[i];
}

void shift_down_one(std::span<const std::uint64_t> src,
                    std::span<std::uint64_t> out) {
  if (src.size() < kParallelMinWords) return serial::shift_down_one(src, out);
  const std::ptrdiff_t n = ssize(src.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n - 1; ++i) {
    out[i] = (src[i] >> 1) | (src[i + 1] << 63);
  }
  out[n - 1] = src[n - 1] >> 1;
}

std::size_t transpose_events(std::span<const std::uint8_t> cells,
                             std::size_t num_events, std::size_t num_vars,
                             std::size_t words_per_column,
                             std::span<std::uint64_t> out) {
  // Each thread owns whole output words, so no two threads touch the same
  // word of any column. Every event row is read once.
  const std::ptrdiff_t num_words = ssize((num_events + 63) / 64);
  if (static_cast<std::size_t>(num_words) < kParallelMinWords / 16) {
    return serial::transpose_events(cells, num_events, num_vars, words_per_column, out);
  }
  std::size_t visited = 0;
#pragma omp parallel reduction(+ : visited)
  {
    std::vector<std::uint64_t> acc(num_vars);
#pragma omp for schedule(static)
    for (std::ptrdiff_t w = 0; w < num_words; ++w) {
      const std::size_t first = static_cast<std::size_t>(w) * 64;
      const std::size_t stop = std::min(first + 64, num_events);
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t* a = acc.data();
      for (std::size_t e = first; e < stop; ++e) {
        const std::uint8_t* row = cells.data() + e * num_vars;
        const unsigned shift = static_cast<unsigned>(e - first);
        for (std::size_t v = 0; v < num_vars; ++v) a[v] |= std::uint64_t{row[v]} << shift;
      }
      visited += stop - first;
      for (std::size_t v = 0; v < num_vars; ++v) {
        out[v * words_per_column + static_cast<std::size_t>(w)] = acc[v];
      }
    }
  }
  return visited;
}

}  // namespace parallel

int max_threads() { return omp_get_max_threads(); }

}  // namespace ltlbit::kernels
