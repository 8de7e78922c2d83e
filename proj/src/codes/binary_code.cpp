#include <algorithm>

#include "accred/codes.hpp"
#include "accred/error.hpp"

namespace accred {

Word word_from_string(std::string_view bits) {
  if (bits.size() > kMaxWordLength) {
    throw DomainError("word longer than " + std::to_string(kMaxWordLength) + " bits");
  }
  Word w = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("invalid bit '" + std::string(1, c) + "'");
    w = (w << 1) | static_cast<Word>(c == '1');
  }
  return w;
}

std::string word_to_string(Word w, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if (coordinate(w, length, i)) s[i] = '1';
  }
  return s;
}

namespace {

void check_length(std::size_t length) {
  if (length == 0 || length > kMaxWordLength) {
    throw DomainError("code length must be in [1, 64], got " + std::to_string(length));
  }
}

}  // namespace

BinaryCode BinaryCode::from_words(std::size_t length, std::vector<Word> words) {
  check_length(length);
  const Word mask = low_mask(length);
  for (Word w : words) {
    if ((w & ~mask) != 0) throw DomainError("word wider than code length");
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
    throw DomainError("duplicate codeword");
  }
  return BinaryCode(length, std::move(words), std::nullopt);
}

BinaryCode BinaryCode::from_generator(std::size_t length, std::vector<Word> rows,
                                      const EnumerationLimits& limits) {
  check_length(length);
  const Word mask = low_mask(length);
  for (Word r : rows) {
    if ((r & ~mask) != 0) throw DomainError("generator row wider than code length");
  }
  // reduce to a basis so the enumeration is 2^rank
  std::vector<Word> basis;
  for (Word r : rows) {
    for (Word b : basis) r = std::min(r, r ^ b);
    if (r != 0) {
      basis.push_back(r);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  if (basis.size() > limits.max_generator_dimension) {
    throw LimitExceeded("generator dimension " + std::to_string(basis.size()) +
                        " exceeds enumeration limit " +
                        std::to_string(limits.max_generator_dimension));
  }
  std::vector<Word> words;
  words.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << basis.size()); ++m) {
    Word w = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((m >> i) & 1U) w ^= basis[i];
    }
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return BinaryCode(length, std::move(words), std::move(rows));
}

bool BinaryCode::contains(Word w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::vector<Word> BinaryCode::words_with(std::size_t i, bool bit) const {
  std::vector<Word> out;
  for (Word w : words_) {
    if (coordinate(w, length_, i) == bit) out.push_back(w);
  }
  return out;
}

std::optional<std::size_t> HatSubcode::index_of(Word w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words.begin());
}

BinaryCode hamming_7_4() {
  return BinaryCode::from_generator(7, {word_from_string("1101000"), word_from_string("1010100"),
                                        word_from_string("0110010"),
                                        word_from_string("1110001")});
}

BinaryCode repetition_code(std::size_t length) {
  check_length(length);
  return BinaryCode::from_generator(length, {low_mask(length)});
}

BinaryCode full_space(std::size_t length) {
  check_length(length);
  std::vector<Word> rows;
  for (std::size_t i = 0; i < length; ++i) rows.push_back(Word{1} << bit_of(length, i));
  return BinaryCode::from_generator(length, std::move(rows));
}

BinaryCode joint_example_code() {
  return BinaryCode::from_generator(
      9, {word_from_string("111111111"), word_from_string("001001101"),
          word_from_string("000101011"), word_from_string("000010111")});
}

}  // namespace accred
