#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "accred/codes.hpp"
#include "accred/complexity.hpp"
#include "accred/feasible_pair.hpp"
#include "accred/rational.hpp"

namespace accred {

// One storage block built from a covering code: nodes are the hat codewords in
// their +-1 form (Boolean 0 -> +1, 1 -> -1), followed by the p systematic
// coordinates when the scheme is systematic. Immutable.
struct ProtocolScheme {
  std::size_t block_length = 0;
  BinaryCode code = BinaryCode::from_words(1, {0});
  HatSubcode hat;
  int covering_radius = 0;
  bool systematic = true;
  int access_bound = 1;  // r + 1
  bool include_all_ones_node = true;
  // nearest codeword index for every word of F_2^p; empty when p is too large
  std::vector<std::uint32_t> nearest_table;

  std::size_t coded_nodes() const { return hat.size(); }
  std::size_t nodes_per_block() const { return hat.size() + (systematic ? block_length : 0); }
  BlockParameters parameters() const;

  // The p x (p + ĉ) matrix (B | I), or B alone for a non-systematic scheme.
  std::vector<std::vector<int>> encoding_matrix() const;

  Word nearest(Word v) const;
};

ProtocolScheme build_scheme(const BinaryCode& code, const EnumerationLimits& limits = {});

// F_2^i with its systematic nodes dropped: per block (i, 2^(i-1), 1).
ProtocolScheme build_nonsystematic_halfspace(int i);

// Global placement of blocks. Blocks are contiguous; inside a coded block the
// coded nodes precede the systematic ones; the all-ones node is last.
class StorageLayout {
 public:
  struct Block {
    std::shared_ptr<const ProtocolScheme> scheme;  // null for a raw (uncoded) block
    std::size_t data_offset = 0;
    std::size_t data_length = 0;
    std::size_t node_offset = 0;
  };

  static StorageLayout uniform(std::shared_ptr<const ProtocolScheme> scheme, std::size_t blocks);

  // u*t blocks of the first scheme followed by v*t blocks of the second.
  static StorageLayout interleaved(std::shared_ptr<const ProtocolScheme> first,
                                   std::shared_ptr<const ProtocolScheme> second, std::size_t u,
                                   std::size_t v, std::size_t t);

  // k raw nodes plus the all-ones node.
  static StorageLayout uncoded(std::size_t k);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t data_dimension() const { return data_dimension_; }
  std::size_t node_count() const { return node_count_; }
  std::size_t all_ones_node() const { return node_count_ - 1; }

  std::size_t coded_node(std::size_t block, std::size_t hat_index) const;
  std::size_t systematic_node(std::size_t block, std::size_t coordinate) const;

  // Sum of per-block access bounds (r+1 each; the block length for raw blocks).
  std::size_t pm1_access_bound() const;

  // Encoding coefficients lambda of one node as (data index, coefficient).
  std::vector<std::pair<std::size_t, int>> encoding_row(std::size_t node) const;

 private:
  void append(std::shared_ptr<const ProtocolScheme> scheme, std::size_t data_length);
  void seal();

  std::vector<Block> blocks_;
  std::size_t data_dimension_ = 0;
  std::size_t node_count_ = 0;
};

// Servers to contact and how to combine their contents: value = sum mu_j y_{id_j}.
// Ids are distinct, increasing, and every coefficient is nonzero.
struct AccessPlan {
  std::vector<std::size_t> server_ids;
  std::vector<Rational> decode_coefficients;
  std::size_t expected_access = 0;  // the bound advertised for this query class

  std::size_t access_count() const { return server_ids.size(); }
  friend bool operator==(const AccessPlan&, const AccessPlan&) = default;
};

// Accumulates node coefficients; merged coefficients are summed and zeros dropped.
class PlanBuilder {
 public:
  void add(std::size_t node, const Rational& coefficient);
  void add_scaled(const AccessPlan& plan, const Rational& scale);
  AccessPlan finish(std::size_t expected_access) const;

 private:
  std::map<std::size_t, Rational> terms_;
};

// {+-1} query restricted to one block.
AccessPlan plan_pm1(const StorageLayout& layout, std::span<const int> w_block, std::size_t block);

// {+-1} query over the whole data vector.
AccessPlan plan_pm1(const StorageLayout& layout, std::span<const int> w);

// w over {a, b}: (a-b)/2 times the {+-1} plan plus (a+b)/2 on the all-ones node.
AccessPlan plan_two_valued(const StorageLayout& layout, std::span<const Rational> w,
                           const Rational& a, const Rational& b);

// w over the decomposed set: one {+-1} plan per level, merged, plus the all-ones node.
AccessPlan plan_universal(const StorageLayout& layout, std::span<const Rational> w,
                          const Decomposition& d);

struct Agreement {
  std::vector<int> signs;
  std::vector<std::size_t> positions;  // increasing
};

// Signs s and positions B with s_i * levels[i][j] = 1 for every level i and j in B,
// |B| >= k / 2^theta, by successive halving.
Agreement find_agreement(const std::vector<std::vector<int>>& levels);

// Uncoded storage with the all-ones node; at most k - ceil(k/2^theta) + 1 accesses.
AccessPlan plan_joint_trivial(const StorageLayout& uncoded_layout, std::span<const Rational> w,
                              const Decomposition& d);

// Joint retrieval through the generalized covering radius: per block theta
// coded nodes plus at most R_theta systematic nodes.
AccessPlan plan_gcr(const StorageLayout& layout, std::span<const Rational> w,
                    const Decomposition& d, int generalized_radius);

// ((u n1 + v n2)/(u k1 + v k2), (u l1 + v l2)/(u k1 + v k2)).
FeasiblePair combine_protocols(const BlockParameters& p1, const BlockParameters& p2, long u,
                               long v);

// lambda * pair1 + (1 - lambda) * pair2 for rational lambda in [0, 1], realized
// through the integer interleaving with u = u' lcm / k1, v = v' lcm / k2.
FeasiblePair convex_mix(const BlockParameters& p1, const BlockParameters& p2,
                        const Rational& lambda);

}  // namespace accred
