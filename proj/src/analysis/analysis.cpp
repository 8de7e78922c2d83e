#include "accred/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <tuple>

#include "accred/error.hpp"

namespace accred {

int family_priority(std::string_view family) {
  static constexpr std::string_view kOrder[] = {"Trivial",    "HamExp",        "HamAmal",
                                                "NonlinAmal", "PiecewiseAmal", "HalfSpace"};
  for (std::size_t i = 0; i < std::size(kOrder); ++i) {
    if (kOrder[i] == family) return static_cast<int>(i);
  }
  return static_cast<int>(std::size(kOrder));
}

namespace {

bool preferred(const FeasiblePair& a, const FeasiblePair& b) {
  return std::make_tuple(family_priority(a.family), a.index, a.family) <
         std::make_tuple(family_priority(b.family), b.index, b.family);
}

// Generic front over arbitrary keys: sort by (x, y, preference) and sweep.
template <class T, class Key>
std::vector<T> front_by(std::vector<T> items, Key key, auto pair_of) {
  std::sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    const auto& [ax, ay] = key(a);
    const auto& [bx, by] = key(b);
    if (ax != bx) return ax < bx;
    if (ay != by) return ay < by;
    return preferred(pair_of(a), pair_of(b));
  });
  std::vector<T> out;
  for (const T& item : items) {
    const auto [x, y] = key(item);
    if (!out.empty()) {
      const auto [lx, ly] = key(out.back());
      // sorted by x, so only the last kept y matters
      if (ly <= y) continue;
    }
    out.push_back(item);
  }
  return out;
}

BigInt hundredths(const Rational& q, DecimalMode mode) {
  return mode == DecimalMode::round ? round_hundredths(q) : truncate_hundredths(q);
}

// (b - a) x (c - a) <= 0: c is on or below the line through a and b.
bool not_convex(const FeasiblePair& a, const FeasiblePair& b, const FeasiblePair& c) {
  const Rational cross = (b.redundancy - a.redundancy) * (c.access - a.access) -
                         (b.access - a.access) * (c.redundancy - a.redundancy);
  return sgn(cross) <= 0;
}

}  // namespace

std::vector<FeasiblePair> pareto_front(std::vector<FeasiblePair> pairs) {
  return front_by(
      std::move(pairs),
      [](const FeasiblePair& p) { return std::pair<const Rational&, const Rational&>(p.redundancy, p.access); },
      [](const FeasiblePair& p) -> const FeasiblePair& { return p; });
}

std::vector<FeasiblePair> lower_hull(std::vector<FeasiblePair> pairs) {
  const std::vector<FeasiblePair> front = pareto_front(std::move(pairs));
  std::vector<FeasiblePair> hull;
  for (const auto& p : front) {
    while (hull.size() >= 2 && not_convex(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

std::optional<Rational> hull_access(std::span<const FeasiblePair> hull, const Rational& nu) {
  if (hull.empty() || nu < hull.front().redundancy || nu > hull.back().redundancy) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[i + 1];
    if (nu <= b.redundancy) {
      const Rational lambda = (b.redundancy - nu) / (b.redundancy - a.redundancy);
      return lambda * a.access + (1 - lambda) * b.access;
    }
  }
  return hull.back().access;
}

std::vector<FeasiblePair> candidate_pairs(std::span<const Family> families, int first, int last) {
  std::vector<FeasiblePair> out{trivial_pair()};
  for (Family f : families) {
    for (int i = std::max(first, family_min_index(f)); i <= last; ++i) {
      out.push_back(family_pair(f, i));
    }
  }
  return out;
}

std::vector<TableRow> generate_table(std::span<const Family> families, int first, int last,
                                     const Rational& cap, DecimalMode mode) {
  std::vector<TableRow> rows;
  for (auto& pair : candidate_pairs(families, first, last)) {
    if (pair.redundancy > cap) continue;
    TableRow row;
    row.redundancy = hundredths(pair.redundancy, mode);
    row.access = hundredths(pair.access, mode);
    row.pair = std::move(pair);
    rows.push_back(std::move(row));
  }
  return front_by(
      std::move(rows),
      [](const TableRow& r) { return std::pair<const BigInt&, const BigInt&>(r.redundancy, r.access); },
      [](const TableRow& r) -> const FeasiblePair& { return r.pair; });
}

void write_table_csv(std::ostream& out, std::span<const TableRow> rows) {
  out << "label,redundancy,access,family,index\n";
  for (const auto& r : rows) {
    out << r.pair.label() << ',' << format_hundredths(r.redundancy) << ','
        << format_hundredths(r.access) << ',' << r.pair.family << ',' << r.pair.index << '\n';
  }
}

void write_pairs_csv(std::ostream& out, std::span<const FeasiblePair> pairs) {
  out << "label,redundancy,access,family,index\n";
  for (const auto& p : pairs) {
    out << p.label() << ',' << to_string(p.redundancy) << ',' << to_string(p.access) << ','
        << p.family << ',' << p.index << '\n';
  }
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double bound_lambda_min(double nu, int m) {
  if (!(nu >= 1.0)) throw DomainError("redundancy must be at least 1");
  if (m < 1) throw DomainError("alphabet exponent must be positive");
  const auto f = [&](double lambda) {
    return binary_entropy(lambda / nu) - m * (1.0 - lambda) / nu;
  };
  // f increases up to nu / (1 + 2^-m) and f(1) >= 0, so the bracket holds a sign change.
  double lo = 0.0;
  double hi = std::min(1.0, nu / (1.0 + std::ldexp(1.0, -m)));
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

std::vector<CurvePoint> bound_curve(std::span<const double> nu_grid, int m) {
  std::vector<CurvePoint> curve(nu_grid.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < nu_grid.size(); ++i) {
    curve[i] = CurvePoint{nu_grid[i], bound_lambda_min(nu_grid[i], m), m};
  }
  return curve;
}

std::vector<double> linear_grid(double nu_min, double nu_max, int steps) {
  if (steps < 1) throw DomainError("grid needs at least one step");
  if (!(nu_min >= 1.0) || !(nu_max >= nu_min)) throw DomainError("grid needs 1 <= nu_min <= nu_max");
  std::vector<double> grid;
  for (int s = 0; s <= steps; ++s) grid.push_back(nu_min + (nu_max - nu_min) * s / steps);
  return grid;
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve) {
  out << "nu,lambda_min,m\n";
  const auto precision = out.precision(10);
  for (const auto& p : curve) out << p.nu << ',' << p.lambda_min << ',' << p.m << '\n';
  out.precision(precision);
}

bool check_counting_bound(long n, long k, long l, long alphabet_size, bool systematic) {
  if (k <= 0 || l <= 0 || l > n) throw DomainError("counting bound needs 0 < l <= n and k > 0");
  if (alphabet_size < 2) throw DomainError("alphabet needs at least two symbols");
  BigInt choose;
  mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(l));
  if (systematic) {
    if (alphabet_size != 2) throw DomainError("the systematic refinement is binary only");
    BigInt inner;
    if (l <= k) {
      mpz_bin_uiui(inner.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(l));
    }
    BigInt lhs = choose - inner;
    BigInt rhs = 1;
    if (k >= l) {
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(k - l));
    } else {
      mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(l - k));
    }
    return lhs >= rhs;
  }
  // binom(n, l) >= |A|^(k - l)
  if (l >= k) return choose >= 1;
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(alphabet_size),
                static_cast<unsigned long>(k - l));
  return choose >= rhs;
}

}  // namespace accred
