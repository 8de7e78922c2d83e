#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "accred/rational.hpp"

namespace accred {

// A finite set of exact rationals, strictly increasing.
class CoefficientSet {
 public:
  // Sorts; throws DomainError on an empty input or repeated values.
  explicit CoefficientSet(std::vector<Rational> values);

  // "1,2,3,5", "1/2, -3, 0.75".
  static CoefficientSet parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::optional<std::size_t> index_of(const Rational& a) const;

 private:
  std::vector<Rational> values_;
};

// A = s + sum_{i in I_a} z_i for every a, with every step z_i > 0.
struct Decomposition {
  Rational offset;
  std::vector<Rational> steps;
  std::vector<Rational> elements;                  // the set, increasing
  std::vector<std::vector<std::size_t>> selectors;  // selectors[e] = I_{elements[e]}

  std::size_t theta() const { return steps.size(); }
  const std::vector<std::size_t>& selector_of(const Rational& a) const;
};

struct ComplexityLimits {
  // Largest set handled by the exhaustive certificate search.
  std::size_t max_set_size = 6;
};

int complexity(const CoefficientSet& set, const ComplexityLimits& limits = {});

// Closed forms for |A| <= 4; nullopt for larger sets.
std::optional<int> complexity_fast_path(const CoefficientSet& set);

Decomposition decompose(const CoefficientSet& set, const ComplexityLimits& limits = {});

// Exact check that every element is reproduced by its selector and every step
// is positive.
bool is_valid_decomposition(const Decomposition& d, const CoefficientSet& set);

// The sumset {z_1,0} + ... + {z_theta,0} + {s}, increasing, deduplicated.
std::vector<Rational> expand_sumset(const Rational& offset, std::span<const Rational> steps);

// A weight vector broken into theta {+-1} levels:
//   w = sum_i scales[i] * levels[i] + offset * (1,...,1).
struct WeightSplit {
  std::vector<std::vector<int>> levels;
  std::vector<Rational> scales;
  Rational offset;
};

// Throws DomainError naming the index of the first entry outside the set.
WeightSplit split_weights(std::span<const Rational> w, const Decomposition& d);

bool is_almost_sidon(const CoefficientSet& set);

// (ceil(log2 m), m - 1); (1, 1) for m < 2.
std::pair<int, int> complexity_bounds(std::size_t m);

}  // namespace accred
