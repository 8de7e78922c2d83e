#include "accred/complexity.hpp"

#include <algorithm>
#include <cstdint>

#include "accred/error.hpp"
#include "complexity/linear_algebra.hpp"

namespace accred {

CoefficientSet::CoefficientSet(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("coefficient set is empty");
  for (auto& v : values_) v.canonicalize();
  std::sort(values_.begin(), values_.end());
  if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
    throw DomainError("coefficient set has repeated values");
  }
}

CoefficientSet CoefficientSet::parse(std::string_view text) {
  return CoefficientSet(parse_rational_list(text));
}

std::optional<std::size_t> CoefficientSet::index_of(const Rational& a) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), a);
  if (it == values_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

const std::vector<std::size_t>& Decomposition::selector_of(const Rational& a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) {
    throw DomainError("value " + to_string(a) + " is not in the decomposed set");
  }
  return selectors[static_cast<std::size_t>(it - elements.begin())];
}

std::pair<int, int> complexity_bounds(std::size_t m) {
  if (m < 2) return {1, 1};
  int lower = 0;
  while ((std::size_t{1} << lower) < m) ++lower;
  return {lower, static_cast<int>(m) - 1};
}

std::optional<int> complexity_fast_path(const CoefficientSet& set) {
  switch (set.size()) {
    case 1:
    case 2: return 1;
    case 3: return 2;
    case 4: return set[0] + set[3] == set[1] + set[2] ? 2 : 3;
    default: return std::nullopt;
  }
}

namespace {

// Column j of the certificate is a bit pattern over the set's rows (bit r for
// row r). Patterns are normalized to have row 0 clear: complementing a column
// does not change the span once the all-ones column is present. Zero columns
// add nothing, so the candidates are the even patterns 2, 4, ..., 2^M - 2.
using Pattern = std::uint32_t;

bool rows_distinct(const std::vector<Pattern>& columns, std::size_t rows) {
  std::vector<std::uint32_t> signature(rows, 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t r = 0; r < rows; ++r) {
      if ((columns[j] >> r) & 1U) signature[r] |= 1U << j;
    }
  }
  std::sort(signature.begin(), signature.end());
  return std::adjacent_find(signature.begin(), signature.end()) == signature.end();
}

detail::RationalMatrix certificate_matrix(const std::vector<Pattern>& columns, std::size_t rows) {
  detail::RationalMatrix m(rows, columns.size() + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    m.at(r, 0) = 1;
    for (std::size_t j = 0; j < columns.size(); ++j) m.at(r, j + 1) = (columns[j] >> r) & 1U;
  }
  return m;
}

// First theta-subset of candidate patterns (lexicographic over increasing
// pattern values) whose span with the all-ones column holds the set.
std::optional<std::vector<Pattern>> find_certificate(const std::vector<Rational>& values,
                                                     std::size_t theta) {
  const std::size_t rows = values.size();
  const Pattern top = (Pattern{1} << rows) - 2;
  std::vector<Pattern> columns(theta);
  for (std::size_t j = 0; j < theta; ++j) columns[j] = static_cast<Pattern>(2 * (j + 1));
  if (columns.back() > top) return std::nullopt;

  while (true) {
    if (rows_distinct(columns, rows) &&
        detail::in_column_span(certificate_matrix(columns, rows), values)) {
      return columns;
    }
    // next combination of even patterns
    std::size_t j = theta;
    while (j > 0) {
      --j;
      const Pattern limit = static_cast<Pattern>(top - 2 * (theta - 1 - j));
      if (columns[j] < limit) {
        columns[j] += 2;
        for (std::size_t k = j + 1; k < theta; ++k) columns[k] = columns[k - 1] + 2;
        break;
      }
      if (j == 0) return std::nullopt;
    }
  }
}

void check_limit(const CoefficientSet& set, const ComplexityLimits& limits) {
  if (set.size() > limits.max_set_size) {
    throw LimitExceeded("coefficient set of size " + std::to_string(set.size()) +
                        " exceeds the exhaustive search limit of " +
                        std::to_string(limits.max_set_size));
  }
  if (set.size() > 31) throw LimitExceeded("coefficient set too large for pattern search");
}

// s = a_0 and z_i = a_i - a_0: always valid, theta = M - 1.
Decomposition staircase(const CoefficientSet& set) {
  Decomposition d;
  d.elements = set.values();
  d.offset = set[0];
  d.selectors.push_back({});
  for (std::size_t i = 1; i < set.size(); ++i) {
    d.steps.push_back(set[i] - set[0]);
    d.selectors.push_back({i - 1});
  }
  return d;
}

}  // namespace

Decomposition decompose(const CoefficientSet& set, const ComplexityLimits& limits) {
  check_limit(set, limits);
  const std::size_t m = set.size();
  if (m == 1) {
    Decomposition d;
    d.elements = set.values();
    d.offset = set[0];
    d.steps = {Rational(1)};
    d.selectors = {{}};
    return d;
  }

  const auto [lower, upper] = complexity_bounds(m);
  for (int theta = lower; theta < upper; ++theta) {
    const auto columns = find_certificate(set.values(), static_cast<std::size_t>(theta));
    if (!columns) continue;

    auto solution = detail::solve_full_rank(certificate_matrix(*columns, m), set.values());
    if (!solution) throw InternalError("minimal certificate is not of full column rank");

    std::vector<Pattern> patterns = *columns;
    Decomposition d;
    d.elements = set.values();
    d.offset = (*solution)[0];
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      Rational z = (*solution)[j + 1];
      if (sgn(z) == 0) throw InternalError("zero step in a minimal certificate");
      if (sgn(z) < 0) {
        // z b = z 1 - z (1 - b)
        d.offset += z;
        z = -z;
        patterns[j] = ~patterns[j] & ((Pattern{1} << m) - 1);
      }
      d.steps.push_back(z);
    }
    d.selectors.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < patterns.size(); ++j) {
        if ((patterns[j] >> r) & 1U) d.selectors[r].push_back(j);
      }
    }
    return d;
  }
  return staircase(set);
}

int complexity(const CoefficientSet& set, const ComplexityLimits& limits) {
  return static_cast<int>(decompose(set, limits).theta());
}

bool is_valid_decomposition(const Decomposition& d, const CoefficientSet& set) {
  if (d.elements != set.values() || d.selectors.size() != set.size() || d.steps.empty()) {
    return false;
  }
  for (const auto& z : d.steps) {
    if (sgn(z) <= 0) return false;
  }
  for (std::size_t e = 0; e < set.size(); ++e) {
    Rational value = d.offset;
    for (std::size_t i : d.selectors[e]) {
      if (i >= d.steps.size()) return false;
      value += d.steps[i];
    }
    if (value != set[e]) return false;
  }
  return true;
}

std::vector<Rational> expand_sumset(const Rational& offset, std::span<const Rational> steps) {
  std::vector<Rational> sums{offset};
  for (const auto& z : steps) {
    const std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + z);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

WeightSplit split_weights(std::span<const Rational> w, const Decomposition& d) {
  WeightSplit split;
  const std::size_t theta = d.theta();
  split.levels.assign(theta, std::vector<int>(w.size(), -1));
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto it = std::lower_bound(d.elements.begin(), d.elements.end(), w[j]);
    if (it == d.elements.end() || *it != w[j]) {
      throw DomainError("weight entry " + std::to_string(j) + " = " + to_string(w[j]) +
                        " is not in the coefficient set");
    }
    for (std::size_t i : d.selectors[static_cast<std::size_t>(it - d.elements.begin())]) {
      split.levels[i][j] = 1;
    }
  }
  split.offset = d.offset;
  for (const auto& z : d.steps) {
    split.scales.push_back(z / 2);
    split.offset += z / 2;
  }
  return split;
}

bool is_almost_sidon(const CoefficientSet& set) {
  std::vector<Rational> sums;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) sums.push_back(set[i] + set[j]);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace accred
