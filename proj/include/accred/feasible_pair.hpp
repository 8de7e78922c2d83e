#pragma once

#include <string>

#include "accred/rational.hpp"

namespace accred {

// (n/k, l/k) for a protocol family member, exact.
struct FeasiblePair {
  Rational redundancy;
  Rational access;
  std::string family;
  int index = 0;

  // "HamAmal_4", or the bare family name when the pair is not indexed.
  std::string label() const;
};

// Per-block protocol parameters.
struct BlockParameters {
  long k = 0;
  long n = 0;
  long l = 0;
};

}  // namespace accred
