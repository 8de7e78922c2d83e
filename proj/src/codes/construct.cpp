#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "accred/codes.hpp"
#include "accred/error.hpp"

namespace accred {
namespace {

constexpr std::size_t kMaxConstructedWords = std::size_t{1} << 26;

// Reduce rows so that at most one has the given bit set; returns the index of
// that row, or rows.size() when none has it.
std::size_t isolate_bit(std::vector<Word>& rows, Word bit) {
  std::size_t pivot = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] & bit) {
      if (pivot == rows.size()) {
        pivot = i;
      } else {
        rows[i] ^= rows[pivot];
      }
    }
  }
  return pivot;
}

std::string describe_cell(const std::vector<std::size_t>& cell) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < cell.size(); ++i) out << (i ? "," : "") << cell[i];
  out << ')';
  return out.str();
}

}  // namespace

BinaryCode amalgamated_direct_sum(const BinaryCode& a, const BinaryCode& b,
                                  const EnumerationLimits& limits) {
  if (a.empty() || b.empty()) throw DomainError("amalgamated direct sum of an empty code");
  const std::size_t pa = a.length();
  const std::size_t pb = b.length();
  const std::size_t length = pa + pb - 1;
  if (length > kMaxWordLength) throw DomainError("amalgamated code longer than 64 bits");

  for (bool bit : {false, true}) {
    if (a.words_with(pa - 1, bit).empty()) {
      throw DomainError(std::string("last coordinate of the first code never takes value ") +
                        (bit ? "1" : "0"));
    }
    if (b.words_with(0, bit).empty()) {
      throw DomainError(std::string("first coordinate of the second code never takes value ") +
                        (bit ? "1" : "0"));
    }
  }
  if (!is_acceptable(a, pa - 1, limits)) {
    throw DomainError("last coordinate of the first code is not acceptable");
  }
  if (!is_acceptable(b, 0, limits)) {
    throw DomainError("first coordinate of the second code is not acceptable");
  }

  const Word tail_mask = low_mask(pb - 1);
  std::vector<Word> words;
  for (Word u : a.words()) {
    const bool shared = (u & 1U) != 0;
    for (Word x : b.words()) {
      if (coordinate(x, pb, 0) != shared) continue;
      words.push_back((u << (pb - 1)) | (x & tail_mask));
    }
  }
  if (words.size() > kMaxConstructedWords) throw LimitExceeded("amalgamated code too large");
  BinaryCode result = BinaryCode::from_words(length, std::move(words));

  if (a.is_linear() && b.is_linear()) {
    std::vector<Word> rows_a = *a.generator();
    std::vector<Word> rows_b = *b.generator();
    const std::size_t pivot_a = isolate_bit(rows_a, Word{1});
    const std::size_t pivot_b = isolate_bit(rows_b, Word{1} << (pb - 1));
    std::vector<Word> rows;
    for (std::size_t i = 0; i < rows_a.size(); ++i) {
      Word row = rows_a[i] << (pb - 1);
      if (i == pivot_a) row |= rows_b[pivot_b] & tail_mask;
      rows.push_back(row);
    }
    for (std::size_t i = 0; i < rows_b.size(); ++i) {
      if (i != pivot_b) rows.push_back(rows_b[i] & tail_mask);
    }
    BinaryCode linear = BinaryCode::from_generator(length, std::move(rows), limits);
    if (!(linear == result)) throw InternalError("amalgamated generator does not span the code");
    result = std::move(linear);
  }

  if (length <= limits.max_radius_length) {
    const int bound = covering_radius(a, limits) + covering_radius(b, limits);
    if (covering_radius(result, limits) > bound) {
      throw InternalError("amalgamated direct sum exceeded r_A + r_B");
    }
  }
  return result;
}

BinaryCode cartesian_extend(const BinaryCode& code, std::size_t extra) {
  if (extra == 0) return code;
  const std::size_t length = code.length() + extra;
  if (length > kMaxWordLength) throw DomainError("extended code longer than 64 bits");
  if (extra >= 26 || (code.size() << extra) > kMaxConstructedWords) {
    throw LimitExceeded("extended code too large to materialize");
  }
  if (code.is_linear()) {
    std::vector<Word> rows;
    for (Word r : *code.generator()) rows.push_back(r << extra);
    for (std::size_t i = 0; i < extra; ++i) rows.push_back(Word{1} << i);
    EnumerationLimits limits;
    limits.max_generator_dimension = 26;
    return BinaryCode::from_generator(length, std::move(rows), limits);
  }
  std::vector<Word> words;
  words.reserve(code.size() << extra);
  for (Word u : code.words()) {
    for (Word x = 0; x < (Word{1} << extra); ++x) words.push_back((u << extra) | x);
  }
  return BinaryCode::from_words(length, std::move(words));
}

std::optional<std::vector<std::size_t>> find_uncovered_cell(const PiecewiseSpec& spec) {
  const std::size_t parts = spec.partition.size();
  std::vector<std::size_t> cell(parts, 0);
  while (true) {
    bool covered = false;
    for (const auto& center : spec.centers) {
      std::size_t dist = 0;
      for (std::size_t i = 0; i < parts; ++i) {
        dist += center[i] > cell[i] ? center[i] - cell[i] : cell[i] - center[i];
      }
      if (dist <= spec.radius) {
        covered = true;
        break;
      }
    }
    if (!covered) return cell;
    // odometer increment
    std::size_t i = 0;
    while (i < parts && cell[i] == spec.partition[i]) cell[i++] = 0;
    if (i == parts) return std::nullopt;
    ++cell[i];
  }
}

BinaryCode piecewise_constant_code(const PiecewiseSpec& spec, const EnumerationLimits& limits) {
  if (spec.partition.empty()) throw DomainError("piecewise spec needs at least one part");
  for (std::size_t part : spec.partition) {
    if (part == 0) throw DomainError("partition parts must be positive");
    if (part >= 26) throw LimitExceeded("partition part too long to enumerate");
  }
  const std::size_t length = std::accumulate(spec.partition.begin(), spec.partition.end(),
                                             std::size_t{0});
  if (length > kMaxWordLength) throw DomainError("piecewise code longer than 64 bits");
  for (const auto& center : spec.centers) {
    if (center.size() != spec.partition.size()) {
      throw DomainError("center arity does not match the partition");
    }
    for (std::size_t i = 0; i < center.size(); ++i) {
      if (center[i] > spec.partition[i]) throw DomainError("center weight exceeds part length");
    }
  }
  if (auto cell = find_uncovered_cell(spec)) {
    throw DomainError("Manhattan balls leave cell " + describe_cell(*cell) + " uncovered");
  }

  std::set<Word> words;
  for (const auto& center : spec.centers) {
    std::vector<Word> partial{0};
    for (std::size_t i = 0; i < spec.partition.size(); ++i) {
      const std::size_t part = spec.partition[i];
      std::vector<Word> next;
      for (Word prefix : partial) {
        for (Word pattern = 0; pattern < (Word{1} << part); ++pattern) {
          if (static_cast<std::size_t>(weight(pattern)) == center[i]) {
            next.push_back((prefix << part) | pattern);
          }
        }
      }
      if (next.size() > kMaxConstructedWords) throw LimitExceeded("piecewise code too large");
      partial = std::move(next);
    }
    words.insert(partial.begin(), partial.end());
  }
  BinaryCode code = BinaryCode::from_words(length, {words.begin(), words.end()});
  if (length <= limits.max_radius_length &&
      covering_radius(code, limits) > static_cast<int>(spec.radius)) {
    throw InternalError("piecewise constant code exceeds its covering radius");
  }
  return code;
}

}  // namespace accred
