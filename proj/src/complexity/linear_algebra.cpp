#include "complexity/linear_algebra.hpp"

#include <utility>

namespace accred::detail {
namespace {

// Gauss-Jordan in place; returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && sgn(m.at(sel, col)) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || sgn(m.at(r, col)) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalMatrix augment(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix m(a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) m.at(r, c) = a.at(r, c);
    m.at(r, a.cols) = b[r];
  }
  return m;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return eliminate(m).size(); }

bool in_column_span(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix m = augment(a, b);
  const auto pivots = eliminate(m);
  return pivots.empty() || pivots.back() != a.cols;
}

std::optional<std::vector<Rational>> solve_full_rank(const RationalMatrix& a,
                                                     const std::vector<Rational>& b) {
  RationalMatrix m = augment(a, b);
  const auto pivots = eliminate(m);
  if (pivots.size() != a.cols) return std::nullopt;
  for (std::size_t i = 0; i < a.cols; ++i) {
    if (pivots[i] != i) return std::nullopt;
  }
  // rows beyond the pivots must be zero in the augmented column
  for (std::size_t r = a.cols; r < m.rows; ++r) {
    if (sgn(m.at(r, a.cols)) != 0) return std::nullopt;
  }
  std::vector<Rational> x(a.cols);
  for (std::size_t i = 0; i < a.cols; ++i) x[i] = m.at(i, a.cols);
  return x;
}

}  // namespace accred::detail
