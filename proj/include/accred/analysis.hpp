#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "accred/families.hpp"
#include "accred/feasible_pair.hpp"
#include "accred/rational.hpp"

namespace accred {

// Preference among pairs at the same point: Trivial, HamExp, HamAmal,
// NonlinAmal, PiecewiseAmal, HalfSpace, then anything else; lower index first.
int family_priority(std::string_view family);

// Non-dominated pairs (both coordinates minimized), sorted by redundancy.
// Among identical points the preferred pair is kept. Exact comparison.
std::vector<FeasiblePair> pareto_front(std::vector<FeasiblePair> pairs);

// Vertices of the lower convex hull of the Pareto front, by redundancy.
// Every point on a hull edge is reachable by interleaving its endpoints.
std::vector<FeasiblePair> lower_hull(std::vector<FeasiblePair> pairs);

// Smallest access ratio reachable at redundancy nu by interleaving hull
// vertices; nullopt outside the hull's redundancy range.
std::optional<Rational> hull_access(std::span<const FeasiblePair> hull, const Rational& nu);

// Every family member with first <= i <= last (respecting each family's
// minimum index), plus the trivial pair.
std::vector<FeasiblePair> candidate_pairs(std::span<const Family> families, int first, int last);

enum class DecimalMode { round, truncate };

struct TableRow {
  FeasiblePair pair;
  BigInt redundancy;  // hundredths
  BigInt access;      // hundredths
};

// Candidates with redundancy <= cap, reduced to two decimals, then the Pareto
// front of the reduced values. Sorted by redundancy.
std::vector<TableRow> generate_table(std::span<const Family> families, int first, int last,
                                     const Rational& cap, DecimalMode mode = DecimalMode::round);

// label,redundancy,access,family,index
void write_table_csv(std::ostream& out, std::span<const TableRow> rows);
void write_pairs_csv(std::ostream& out, std::span<const FeasiblePair> pairs);

double binary_entropy(double p);

// Smallest lambda in (0, 1] with H(lambda/nu) >= m (1 - lambda)/nu, by bisection.
double bound_lambda_min(double nu, int m);

struct CurvePoint {
  double nu = 0;
  double lambda_min = 0;
  int m = 1;
};

std::vector<CurvePoint> bound_curve(std::span<const double> nu_grid, int m);

// Evenly spaced grid with steps + 1 points from nu_min to nu_max.
std::vector<double> linear_grid(double nu_min, double nu_max, int steps);

// nu,lambda_min,m
void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve);

// binom(n, l) |A|^l >= |A|^k, exactly. With systematic (binary only) the
// refined form binom(n, l) - binom(k, l) >= 2^(k - l) is checked instead.
bool check_counting_bound(long n, long k, long l, long alphabet_size, bool systematic = false);

}  // namespace accred
