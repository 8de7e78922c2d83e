#pragma once

#include <optional>
#include <vector>

#include "accred/rational.hpp"

namespace accred::detail {

// Dense row-major rational matrix, just enough for span membership tests.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

std::size_t rank(RationalMatrix m);

// rank(A) == rank([A | b]).
bool in_column_span(const RationalMatrix& a, const std::vector<Rational>& b);

// Solves A x = b exactly when A has full column rank and b is in its span;
// nullopt otherwise.
std::optional<std::vector<Rational>> solve_full_rank(const RationalMatrix& a,
                                                     const std::vector<Rational>& b);

}  // namespace accred::detail
