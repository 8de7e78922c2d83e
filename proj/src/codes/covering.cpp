#include <cmath>
#include <limits>

#include "accred/codes.hpp"
#include "accred/error.hpp"
#include "accred/kernels.hpp"

namespace accred {
namespace {

void require_enumerable(const BinaryCode& code, const EnumerationLimits& limits) {
  if (code.length() > limits.max_radius_length) {
    throw LimitExceeded("code length " + std::to_string(code.length()) +
                        " exceeds exhaustive enumeration limit p <= " +
                        std::to_string(limits.max_radius_length));
  }
}

}  // namespace

int covering_radius(const BinaryCode& code, const EnumerationLimits& limits) {
  if (code.empty()) throw DomainError("empty code has no radius");
  require_enumerable(code, limits);
  return kernels::covering_radius_parallel(code.words(), code.length());
}

bool is_closed_under_complement(const BinaryCode& code) {
  for (Word w : code.words()) {
    if (!code.contains(complement(w, code.length()))) return false;
  }
  return true;
}

HatSubcode hat_subcode(const BinaryCode& code) {
  HatSubcode hat;
  hat.length = code.length();
  for (Word w : code.words()) {
    const Word c = complement(w, code.length());
    if (w < c || !code.contains(c)) hat.words.push_back(w);
  }
  return hat;
}

std::optional<int> coordinate_norm(const BinaryCode& code, std::size_t i,
                                   const EnumerationLimits& limits) {
  if (code.empty()) throw DomainError("empty code has no norm");
  if (i >= code.length()) throw DomainError("coordinate out of range");
  require_enumerable(code, limits);
  const auto zeros = code.words_with(i, false);
  const auto ones = code.words_with(i, true);
  if (zeros.empty() || ones.empty()) return std::nullopt;
  return kernels::distance_sum_max_parallel(zeros, ones, code.length());
}

bool is_acceptable(const BinaryCode& code, std::size_t i, const EnumerationLimits& limits) {
  const auto norm = coordinate_norm(code, i, limits);
  if (!norm) return false;
  return *norm <= 2 * (covering_radius(code, limits) + 1) - 1;
}

bool is_normal(const BinaryCode& code, const EnumerationLimits& limits) {
  const int bound = 2 * (covering_radius(code, limits) + 1) - 1;
  for (std::size_t i = 0; i < code.length(); ++i) {
    const auto norm = coordinate_norm(code, i, limits);
    if (norm && *norm <= bound) return true;
  }
  return false;
}

int generalized_covering_radius(const BinaryCode& code, std::size_t t,
                                const EnumerationLimits& limits) {
  if (code.empty()) throw DomainError("empty code has no radius");
  if (t == 0) throw DomainError("generalized covering radius needs t >= 1");
  if (t == 1) return covering_radius(code, limits);
  // 2^(t p) |C|^t, compared in log2 to dodge overflow
  const double log_budget = static_cast<double>(t * code.length()) +
                            static_cast<double>(t) * std::log2(static_cast<double>(code.size()));
  const double log_limit = std::log2(static_cast<double>(limits.max_gcr_evaluations));
  if (log_budget > log_limit + 1e-9) {
    throw LimitExceeded("generalized covering radius search needs 2^" +
                        std::to_string(log_budget) + " evaluations, limit is 2^" +
                        std::to_string(log_limit));
  }
  return kernels::generalized_radius_parallel(code.words(), code.length(), t);
}

Word nearest_codeword(const BinaryCode& code, Word v) {
  if (code.empty()) throw DomainError("empty code has no nearest codeword");
  int best = std::numeric_limits<int>::max();
  Word arg = 0;
  for (Word c : code.words()) {
    const int d = hamming_distance(v, c);
    if (d < best) {
      best = d;
      arg = c;
    }
  }
  return arg;
}

}  // namespace accred
