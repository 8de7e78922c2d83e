#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace accred {

// A binary word of length p <= 64. Coordinate 0 is the most significant of
// the p used bits, so integer order on words equals lexicographic order on
// their '0'/'1' strings.
using Word = std::uint64_t;

inline constexpr std::size_t kMaxWordLength = 64;

constexpr Word low_mask(std::size_t length) {
  return length >= 64 ? ~Word{0} : (Word{1} << length) - 1;
}

constexpr int hamming_distance(Word a, Word b) { return std::popcount(a ^ b); }

constexpr int weight(Word a) { return std::popcount(a); }

// Bit position of coordinate i in a word of the given length.
constexpr std::size_t bit_of(std::size_t length, std::size_t coordinate) {
  return length - 1 - coordinate;
}

constexpr bool coordinate(Word w, std::size_t length, std::size_t i) {
  return ((w >> bit_of(length, i)) & 1U) != 0;
}

constexpr Word complement(Word w, std::size_t length) { return w ^ low_mask(length); }

// Throws DomainError on characters other than '0'/'1' or length > 64.
Word word_from_string(std::string_view bits);

std::string word_to_string(Word w, std::size_t length);

}  // namespace accred
