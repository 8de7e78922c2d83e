#pragma once

// Exhaustive search kernels over the Hamming cube. Each kernel has a plain
// serial reference that follows the definition literally, and an OpenMP
// version with pruning that the library calls. Tests hold the two equal.
//
// All kernels take codewords as a sorted span and the code length p; the
// caller is responsible for enumeration limits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "accred/bits.hpp"

namespace accred::kernels {

// max over all v in F_2^p of min_c d(v, c). words must be nonempty.
int covering_radius_serial(std::span<const Word> words, std::size_t length);
int covering_radius_parallel(std::span<const Word> words, std::size_t length);

// max over v of d(v, A) + d(v, B); both sets nonempty.
int distance_sum_max_serial(std::span<const Word> a, std::span<const Word> b, std::size_t length);
int distance_sum_max_parallel(std::span<const Word> a, std::span<const Word> b,
                              std::size_t length);

// Index (into words) of the nearest codeword of every v in F_2^p, ties going
// to the smallest index.
std::vector<std::uint32_t> nearest_table_serial(std::span<const Word> words, std::size_t length);
std::vector<std::uint32_t> nearest_table_parallel(std::span<const Word> words, std::size_t length);

// t-th generalized covering radius by exhaustive search over t-tuples.
int generalized_radius_serial(std::span<const Word> words, std::size_t length, std::size_t t);
int generalized_radius_parallel(std::span<const Word> words, std::size_t length, std::size_t t);

// Best codeword tuple for a fixed tuple of targets: minimizes the size of the
// union of disagreement supports; ties go to the lexicographically smallest
// tuple of word indices. Returns the indices and the union mask.
struct TupleMatch {
  std::vector<std::size_t> indices;
  Word disagreement = 0;
};
TupleMatch best_tuple(std::span<const Word> words, std::span<const Word> targets);

}  // namespace accred::kernels
