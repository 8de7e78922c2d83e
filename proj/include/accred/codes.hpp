#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "accred/bits.hpp"

namespace accred {

// Limits on exhaustive searches. Exceeding one is an error (LimitExceeded),
// never an approximation.
struct EnumerationLimits {
  std::size_t max_radius_length = 24;              // 2^p vectors per radius/norm scan
  std::uint64_t max_gcr_evaluations = 1ULL << 30;  // 2^(t*p) * |C|^t
  std::size_t max_generator_dimension = 20;        // span enumeration
};

// A binary code of length p: a sorted set of distinct words, plus the
// generator rows when the code is known to be linear. Immutable.
class BinaryCode {
 public:
  // Throws DomainError on duplicate words, words wider than p, or p == 0 / p > 64.
  static BinaryCode from_words(std::size_t length, std::vector<Word> words);

  // The GF(2) row span of the rows (rows need not be independent).
  static BinaryCode from_generator(std::size_t length, std::vector<Word> rows,
                                   const EnumerationLimits& limits = {});

  std::size_t length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(Word w) const;

  bool is_linear() const { return generator_.has_value(); }
  const std::optional<std::vector<Word>>& generator() const { return generator_; }

  // Words whose i'th coordinate equals bit.
  std::vector<Word> words_with(std::size_t coordinate, bool bit) const;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  BinaryCode(std::size_t length, std::vector<Word> words, std::optional<std::vector<Word>> gen)
      : length_(length), words_(std::move(words)), generator_(std::move(gen)) {}

  std::size_t length_ = 0;
  std::vector<Word> words_;
  std::optional<std::vector<Word>> generator_;
};

// One representative per complement pair of the parent code; the lexicographically
// smaller word of each pair is kept. A word whose complement is absent keeps itself.
struct HatSubcode {
  std::size_t length = 0;
  std::vector<Word> words;  // sorted

  std::size_t size() const { return words.size(); }
  std::optional<std::size_t> index_of(Word w) const;
};

// A piecewise-constant code description: a partition of the length and the
// weight profiles (one per part) whose words are all included.
struct PiecewiseSpec {
  std::vector<std::size_t> partition;
  std::vector<std::vector<std::size_t>> centers;
  std::size_t radius = 0;
};

// --- standard codes -------------------------------------------------------

BinaryCode hamming_7_4();
BinaryCode repetition_code(std::size_t length);
BinaryCode full_space(std::size_t length);
// Length-9 linear code with ĉ = 8 and second generalized covering radius 3.
BinaryCode joint_example_code();

// --- covering properties ---------------------------------------------------

int covering_radius(const BinaryCode& code, const EnumerationLimits& limits = {});

bool is_closed_under_complement(const BinaryCode& code);

HatSubcode hat_subcode(const BinaryCode& code);

// N^(i) = max_w d(w, C_0^(i)) + d(w, C_1^(i)); nullopt when either side is empty.
std::optional<int> coordinate_norm(const BinaryCode& code, std::size_t coordinate,
                                   const EnumerationLimits& limits = {});

// N^(i) <= 2r + 1 for the binary alphabet.
bool is_acceptable(const BinaryCode& code, std::size_t coordinate,
                   const EnumerationLimits& limits = {});

bool is_normal(const BinaryCode& code, const EnumerationLimits& limits = {});

// R_t: the least s such that any t vectors are matched by t codewords with the
// union of disagreement supports of size at most s.
int generalized_covering_radius(const BinaryCode& code, std::size_t t,
                                const EnumerationLimits& limits = {});

// Nearest codeword to v; ties resolved toward the lexicographically smallest.
Word nearest_codeword(const BinaryCode& code, Word v);

// --- constructions ---------------------------------------------------------

// Length p_A + p_B - 1, radius at most r_A + r_B. The last coordinate of a and
// the first of b must be acceptable with both symbols present.
BinaryCode amalgamated_direct_sum(const BinaryCode& a, const BinaryCode& b,
                                  const EnumerationLimits& limits = {});

// C x F_2^i.
BinaryCode cartesian_extend(const BinaryCode& code, std::size_t extra);

// First uncovered cell of the weight array, if any.
std::optional<std::vector<std::size_t>> find_uncovered_cell(const PiecewiseSpec& spec);

BinaryCode piecewise_constant_code(const PiecewiseSpec& spec,
                                   const EnumerationLimits& limits = {});

}  // namespace accred
