#include "accred/families.hpp"

#include <initializer_list>

#include "accred/error.hpp"

namespace accred {
namespace {

// Extends each word by repeating its last bit 2i times, which is how the
// amalgamation with the length-(2i+1) repetition code lays out.
std::vector<Word> pad_with_last_bit(std::initializer_list<const char*> rows, int i) {
  std::vector<Word> out;
  for (const char* row : rows) {
    std::string bits(row);
    bits.append(static_cast<std::size_t>(2 * i), bits.back());
    out.push_back(word_from_string(bits));
  }
  return out;
}

void check_index(Family f, int i) {
  if (i < family_min_index(f)) {
    throw DomainError(std::string(family_name(f)) + " needs index >= " +
                      std::to_string(family_min_index(f)) + ", got " + std::to_string(i));
  }
}

}  // namespace

std::string FeasiblePair::label() const {
  if (family.empty()) return "pair";
  if (family == "Trivial") return family;
  return family + "_" + std::to_string(index);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::HamAmal: return "HamAmal";
    case Family::HamExp: return "HamExp";
    case Family::HalfSpace: return "HalfSpace";
    case Family::NonlinAmal: return "NonlinAmal";
    case Family::PiecewiseAmal: return "PiecewiseAmal";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw DomainError("unknown code family '" + std::string(name) + "'");
}

int family_min_index(Family f) { return f == Family::HalfSpace ? 1 : 0; }

BinaryCode family_code(Family f, int i) {
  check_index(f, i);
  switch (f) {
    case Family::HamAmal: {
      if (7 + 2 * i > 64) throw DomainError("HamAmal index too large for 64-bit words");
      auto rows = pad_with_last_bit({"1101000", "1010100", "0110010", "1110001"}, i);
      return BinaryCode::from_generator(static_cast<std::size_t>(7 + 2 * i), std::move(rows));
    }
    case Family::HamExp:
      return cartesian_extend(hamming_7_4(), static_cast<std::size_t>(i));
    case Family::HalfSpace:
      return full_space(static_cast<std::size_t>(i));
    case Family::NonlinAmal: {
      if (6 + 2 * i > 64) throw DomainError("NonlinAmal index too large for 64-bit words");
      auto words = pad_with_last_bit({"000100", "000010", "000001", "100111", "010111", "001111",
                                      "111011", "111101", "111110", "011000", "101000", "110000"},
                                     i);
      return BinaryCode::from_words(static_cast<std::size_t>(6 + 2 * i), std::move(words));
    }
    case Family::PiecewiseAmal: {
      if (5 + 2 * i > 64) throw DomainError("PiecewiseAmal index too large for 64-bit words");
      auto words = pad_with_last_bit(
          {"00100", "00010", "00001", "00111", "11011", "11101", "11110", "11000"}, i);
      return BinaryCode::from_words(static_cast<std::size_t>(5 + 2 * i), std::move(words));
    }
  }
  throw InternalError("unhandled family");
}

int family_radius(Family f, int i) {
  check_index(f, i);
  switch (f) {
    case Family::HamExp: return 1;
    case Family::HalfSpace: return 0;
    default: return 1 + i;
  }
}

long family_hat_size(Family f, int i) {
  check_index(f, i);
  switch (f) {
    case Family::HamAmal: return 8;
    case Family::HamExp: return 1L << (i + 3);
    case Family::HalfSpace: return 1L << (i - 1);
    case Family::NonlinAmal: return 6;
    case Family::PiecewiseAmal: return 4;
  }
  throw InternalError("unhandled family");
}

int family_length(Family f, int i) {
  check_index(f, i);
  switch (f) {
    case Family::HamAmal: return 7 + 2 * i;
    case Family::HamExp: return 7 + i;
    case Family::HalfSpace: return i;
    case Family::NonlinAmal: return 6 + 2 * i;
    case Family::PiecewiseAmal: return 5 + 2 * i;
  }
  throw InternalError("unhandled family");
}

FeasiblePair family_pair(Family f, int i) {
  check_index(f, i);
  if (i > 40) throw DomainError("family index too large");
  const long p = family_length(f, i);
  const long hat = family_hat_size(f, i);
  const long r = family_radius(f, i);
  FeasiblePair pair{Rational(p + hat, p), Rational(r + 1, p), std::string(family_name(f)), i};
  pair.redundancy.canonicalize();
  pair.access.canonicalize();
  return pair;
}

FeasiblePair trivial_pair() { return FeasiblePair{Rational(1), Rational(1, 2), "Trivial", 0}; }

}  // namespace accred
