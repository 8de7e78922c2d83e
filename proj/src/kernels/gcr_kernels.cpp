#include <omp.h>

#include <algorithm>

#include "accred/kernels.hpp"

namespace accred::kernels {
namespace {

// Exhaustive min over all codeword tuples, no pruning.
int min_union_exhaustive(std::span<const Word> words, std::span<const Word> targets,
                         std::size_t level, Word acc) {
  if (level == targets.size()) return weight(acc);
  int best = 65;
  for (Word c : words) {
    best = std::min(best, min_union_exhaustive(words, targets, level + 1,
                                               acc | (targets[level] ^ c)));
  }
  return best;
}

// Branch and bound: current tracks the best union size so far; the search
// stops once current <= floor because the caller only needs the maximum.
void min_union_pruned(std::span<const Word> words, std::span<const Word> targets,
                      std::size_t level, Word acc, int& current, int floor) {
  if (level == targets.size()) {
    current = std::min(current, weight(acc));
    return;
  }
  for (Word c : words) {
    const Word next = acc | (targets[level] ^ c);
    if (weight(next) >= current) continue;
    min_union_pruned(words, targets, level + 1, next, current, floor);
    if (current <= floor) return;
  }
}

void best_tuple_dfs(std::span<const Word> words, std::span<const Word> targets,
                    std::size_t level, Word acc, std::vector<std::size_t>& path,
                    TupleMatch& best, int& best_size) {
  if (level == targets.size()) {
    const int size = weight(acc);
    if (size < best_size) {
      best_size = size;
      best.indices = path;
      best.disagreement = acc;
    }
    return;
  }
  for (std::size_t j = 0; j < words.size(); ++j) {
    const Word next = acc | (targets[level] ^ words[j]);
    if (weight(next) >= best_size) continue;
    path[level] = j;
    best_tuple_dfs(words, targets, level + 1, next, path, best, best_size);
  }
}

void unpack(std::uint64_t index, std::size_t length, std::span<Word> out) {
  const Word mask = low_mask(length);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (index >> (i * length)) & mask;
}

}  // namespace

int generalized_radius_serial(std::span<const Word> words, std::size_t length, std::size_t t) {
  const std::uint64_t tuples = std::uint64_t{1} << (t * length);
  std::vector<Word> targets(t);
  int radius = 0;
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    unpack(idx, length, targets);
    radius = std::max(radius, min_union_exhaustive(words, targets, 0, 0));
  }
  return radius;
}

int generalized_radius_parallel(std::span<const Word> words, std::size_t length, std::size_t t) {
  const std::int64_t tuples = std::int64_t{1} << (t * length);
  int radius = 0;
#pragma omp parallel
  {
    std::vector<Word> targets(t);
    int local = 0;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t idx = 0; idx < tuples; ++idx) {
      unpack(static_cast<std::uint64_t>(idx), length, targets);
      // the minimum is symmetric in the tuple order; visit sorted tuples only
      if (!std::is_sorted(targets.begin(), targets.end())) continue;
      int current = static_cast<int>(length) + 1;
      min_union_pruned(words, targets, 0, 0, current, local);
      local = std::max(local, current);
    }
#pragma omp critical
    radius = std::max(radius, local);
  }
  return radius;
}

TupleMatch best_tuple(std::span<const Word> words, std::span<const Word> targets) {
  TupleMatch best;
  int best_size = 65;
  std::vector<std::size_t> path(targets.size(), 0);
  best_tuple_dfs(words, targets, 0, 0, path, best, best_size);
  return best;
}

}  // namespace accred::kernels
