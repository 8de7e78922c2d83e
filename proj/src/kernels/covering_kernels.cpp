#include <omp.h>

#include <algorithm>
#include <limits>

#include "accred/kernels.hpp"

namespace accred::kernels {

int covering_radius_serial(std::span<const Word> words, std::size_t length) {
  const Word space = Word{1} << length;
  int radius = 0;
  for (Word v = 0; v < space; ++v) {
    int nearest = std::numeric_limits<int>::max();
    for (Word c : words) nearest = std::min(nearest, hamming_distance(v, c));
    radius = std::max(radius, nearest);
  }
  return radius;
}

int covering_radius_parallel(std::span<const Word> words, std::size_t length) {
  const std::int64_t space = std::int64_t{1} << length;
  const Word* data = words.data();
  const std::size_t count = words.size();
  int radius = 0;
#pragma omp parallel
  {
    int local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t v = 0; v < space; ++v) {
      int nearest = std::numeric_limits<int>::max();
      for (std::size_t j = 0; j < count; ++j) {
        nearest = std::min(nearest, hamming_distance(static_cast<Word>(v), data[j]));
        // v cannot raise the maximum any more
        if (nearest <= local) break;
      }
      local = std::max(local, nearest);
    }
#pragma omp critical
    radius = std::max(radius, local);
  }
  return radius;
}

namespace {

int min_distance(Word v, std::span<const Word> set) {
  int best = std::numeric_limits<int>::max();
  for (Word c : set) best = std::min(best, hamming_distance(v, c));
  return best;
}

}  // namespace

int distance_sum_max_serial(std::span<const Word> a, std::span<const Word> b, std::size_t length) {
  const Word space = Word{1} << length;
  int norm = 0;
  for (Word v = 0; v < space; ++v) norm = std::max(norm, min_distance(v, a) + min_distance(v, b));
  return norm;
}

int distance_sum_max_parallel(std::span<const Word> a, std::span<const Word> b,
                              std::size_t length) {
  const std::int64_t space = std::int64_t{1} << length;
  int norm = 0;
#pragma omp parallel for schedule(static) reduction(max : norm)
  for (std::int64_t v = 0; v < space; ++v) {
    const Word w = static_cast<Word>(v);
    norm = std::max(norm, min_distance(w, a) + min_distance(w, b));
  }
  return norm;
}

std::vector<std::uint32_t> nearest_table_serial(std::span<const Word> words, std::size_t length) {
  const Word space = Word{1} << length;
  std::vector<std::uint32_t> table(space);
  for (Word v = 0; v < space; ++v) {
    int best = std::numeric_limits<int>::max();
    std::uint32_t arg = 0;
    for (std::size_t j = 0; j < words.size(); ++j) {
      int d = hamming_distance(v, words[j]);
      if (d < best) {
        best = d;
        arg = static_cast<std::uint32_t>(j);
      }
    }
    table[v] = arg;
  }
  return table;
}

std::vector<std::uint32_t> nearest_table_parallel(std::span<const Word> words, std::size_t length) {
  const std::int64_t space = std::int64_t{1} << length;
  std::vector<std::uint32_t> table(static_cast<std::size_t>(space));
  const Word* data = words.data();
  const std::size_t count = words.size();
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < space; ++v) {
    int best = std::numeric_limits<int>::max();
    std::uint32_t arg = 0;
    for (std::size_t j = 0; j < count; ++j) {
      int d = hamming_distance(static_cast<Word>(v), data[j]);
      if (d < best) {
        best = d;
        arg = static_cast<std::uint32_t>(j);
        if (d == 0) break;
      }
    }
    table[static_cast<std::size_t>(v)] = arg;
  }
  return table;
}

}  // namespace accred::kernels
