#include <numeric>
#include <string>

#include "accred/error.hpp"
#include "accred/protocol.hpp"

namespace accred {

void PlanBuilder::add(std::size_t node, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(node, coefficient);
  if (!inserted) it->second += coefficient;
}

void PlanBuilder::add_scaled(const AccessPlan& plan, const Rational& scale) {
  for (std::size_t i = 0; i < plan.server_ids.size(); ++i) {
    add(plan.server_ids[i], plan.decode_coefficients[i] * scale);
  }
}

AccessPlan PlanBuilder::finish(std::size_t expected_access) const {
  AccessPlan plan;
  plan.expected_access = expected_access;
  for (const auto& [node, c] : terms_) {
    if (sgn(c) == 0) continue;
    plan.server_ids.push_back(node);
    plan.decode_coefficients.push_back(c);
  }
  return plan;
}

namespace {

void check_pm1(std::span<const int> w) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] != 1 && w[j] != -1) {
      throw DomainError("entry " + std::to_string(j) + " of a {+1,-1} query is " +
                        std::to_string(w[j]));
    }
  }
}

void pm1_block(PlanBuilder& builder, const StorageLayout& layout, std::span<const int> w,
               std::size_t block) {
  const auto& b = layout.blocks().at(block);
  if (w.size() != b.data_length) throw DomainError("query length does not match the block");
  if (!b.scheme) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      builder.add(layout.systematic_node(block, j), Rational(w[j]));
    }
    return;
  }
  const ProtocolScheme& s = *b.scheme;
  const std::size_t p = s.block_length;
  Word u = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (w[i] == -1) u |= Word{1} << bit_of(p, i);
  }
  const Word c = s.nearest(u);
  if (auto h = s.hat.index_of(c)) {
    builder.add(layout.coded_node(block, *h), Rational(1));
  } else if (auto hc = s.hat.index_of(complement(c, p))) {
    builder.add(layout.coded_node(block, *hc), Rational(-1));
  } else {
    throw InternalError("nearest codeword has no hat representative");
  }
  const Word diff = u ^ c;
  if (weight(diff) > s.covering_radius) throw InternalError("nearest codeword beyond the radius");
  if (diff != 0 && !s.systematic) throw InternalError("non-systematic block needs an exact match");
  for (std::size_t i = 0; i < p; ++i) {
    if (coordinate(diff, p, i)) builder.add(layout.systematic_node(block, i), Rational(2 * w[i]));
  }
}

std::vector<int> to_pm1(std::span<const Rational> w, const Rational& a, const Rational& b) {
  std::vector<int> out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == a) {
      out[j] = 1;
    } else if (w[j] == b) {
      out[j] = -1;
    } else {
      throw DomainError("entry " + std::to_string(j) + " = " + to_string(w[j]) +
                        " is outside {" + to_string(a) + ", " + to_string(b) + "}");
    }
  }
  return out;
}

void check_length(const StorageLayout& layout, std::size_t n) {
  if (n != layout.data_dimension()) {
    throw DomainError("query has length " + std::to_string(n) + ", data has dimension " +
                      std::to_string(layout.data_dimension()));
  }
}

}  // namespace

AccessPlan plan_pm1(const StorageLayout& layout, std::span<const int> w_block, std::size_t block) {
  check_pm1(w_block);
  PlanBuilder builder;
  pm1_block(builder, layout, w_block, block);
  const auto& b = layout.blocks().at(block);
  return builder.finish(b.scheme ? static_cast<std::size_t>(b.scheme->access_bound)
                                 : b.data_length);
}

AccessPlan plan_pm1(const StorageLayout& layout, std::span<const int> w) {
  check_length(layout, w.size());
  check_pm1(w);
  PlanBuilder builder;
  for (std::size_t b = 0; b < layout.blocks().size(); ++b) {
    const auto& blk = layout.blocks()[b];
    pm1_block(builder, layout, w.subspan(blk.data_offset, blk.data_length), b);
  }
  return builder.finish(layout.pm1_access_bound());
}

AccessPlan plan_two_valued(const StorageLayout& layout, std::span<const Rational> w,
                           const Rational& a, const Rational& b) {
  if (a == b) throw DomainError("two-valued query needs distinct values");
  check_length(layout, w.size());
  const std::vector<int> signs = to_pm1(w, a, b);
  PlanBuilder builder;
  builder.add_scaled(plan_pm1(layout, signs), (a - b) / 2);
  builder.add(layout.all_ones_node(), (a + b) / 2);
  return builder.finish(layout.pm1_access_bound() + 1);
}

AccessPlan plan_universal(const StorageLayout& layout, std::span<const Rational> w,
                          const Decomposition& d) {
  check_length(layout, w.size());
  const WeightSplit split = split_weights(w, d);
  PlanBuilder builder;
  for (std::size_t i = 0; i < split.levels.size(); ++i) {
    builder.add_scaled(plan_pm1(layout, split.levels[i]), split.scales[i]);
  }
  builder.add(layout.all_ones_node(), split.offset);
  return builder.finish(d.theta() * layout.pm1_access_bound() + 1);
}

FeasiblePair combine_protocols(const BlockParameters& p1, const BlockParameters& p2, long u,
                               long v) {
  if (u < 0 || v < 0 || u + v == 0) throw DomainError("interleaving counts must be nonnegative");
  if (p1.k <= 0 || p2.k <= 0) throw DomainError("block dimension must be positive");
  const Rational k = Rational(u) * p1.k + Rational(v) * p2.k;
  FeasiblePair pair;
  pair.redundancy = (Rational(u) * p1.n + Rational(v) * p2.n) / k;
  pair.access = (Rational(u) * p1.l + Rational(v) * p2.l) / k;
  pair.family = "Mix";
  return pair;
}

FeasiblePair convex_mix(const BlockParameters& p1, const BlockParameters& p2,
                        const Rational& lambda) {
  if (sgn(lambda) < 0 || lambda > 1) throw DomainError("mixing weight must lie in [0, 1]");
  if (p1.k <= 0 || p2.k <= 0) throw DomainError("block dimension must be positive");
  Rational lam = lambda;
  lam.canonicalize();
  const BigInt num = lam.get_num();
  const BigInt den = lam.get_den();
  const long zeta = std::lcm(p1.k, p2.k);
  // lambda = u'/(u'+v')
  const BigInt u = num * (zeta / p1.k);
  const BigInt v = (den - num) * (zeta / p2.k);
  if (!u.fits_slong_p() || !v.fits_slong_p()) throw LimitExceeded("mixing weight too fine");
  return combine_protocols(p1, p2, u.get_si(), v.get_si());
}

}  // namespace accred
