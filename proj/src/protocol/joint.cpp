#include <string>

#include "accred/error.hpp"
#include "accred/kernels.hpp"
#include "accred/protocol.hpp"

namespace accred {

Agreement find_agreement(const std::vector<std::vector<int>>& levels) {
  Agreement a;
  if (levels.empty()) return a;
  const std::size_t k = levels[0].size();
  for (std::size_t j = 0; j < k; ++j) a.positions.push_back(j);
  for (const auto& level : levels) {
    if (level.size() != k) throw DomainError("levels have different lengths");
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    for (std::size_t j : a.positions) (level[j] == 1 ? plus : minus).push_back(j);
    if (plus.size() >= minus.size()) {
      a.signs.push_back(1);
      a.positions = std::move(plus);
    } else {
      a.signs.push_back(-1);
      a.positions = std::move(minus);
    }
  }
  return a;
}

AccessPlan plan_joint_trivial(const StorageLayout& uncoded_layout, std::span<const Rational> w,
                              const Decomposition& d) {
  const auto& blocks = uncoded_layout.blocks();
  if (blocks.size() != 1 || blocks[0].scheme) {
    throw DomainError("joint retrieval without coding needs an uncoded layout");
  }
  const std::size_t k = uncoded_layout.data_dimension();
  if (w.size() != k) throw DomainError("query length does not match the data dimension");

  const WeightSplit split = split_weights(w, d);
  const Agreement agree = find_agreement(split.levels);

  Rational common = split.offset;
  for (std::size_t i = 0; i < split.scales.size(); ++i) common += split.scales[i] * agree.signs[i];

  PlanBuilder builder;
  std::size_t next = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (next < agree.positions.size() && agree.positions[next] == j) {
      ++next;
      continue;
    }
    builder.add(uncoded_layout.systematic_node(0, j), w[j] - common);
  }
  builder.add(uncoded_layout.all_ones_node(), common);

  const std::size_t theta = d.theta();
  const std::size_t part = theta >= 63 ? 1 : (k + (std::size_t{1} << theta) - 1) >> theta;
  return builder.finish(k - part + 1);
}

AccessPlan plan_gcr(const StorageLayout& layout, std::span<const Rational> w,
                    const Decomposition& d, int generalized_radius) {
  if (generalized_radius < 0) throw DomainError("generalized radius must be nonnegative");
  if (w.size() != layout.data_dimension()) {
    throw DomainError("query length does not match the data dimension");
  }
  const WeightSplit split = split_weights(w, d);
  const std::size_t theta = d.theta();

  PlanBuilder builder;
  std::size_t bound = 1;
  for (std::size_t b = 0; b < layout.blocks().size(); ++b) {
    const auto& blk = layout.blocks()[b];
    if (!blk.scheme || !blk.scheme->systematic) {
      throw DomainError("joint retrieval needs systematic coded blocks");
    }
    const ProtocolScheme& s = *blk.scheme;
    const std::size_t p = s.block_length;
    std::vector<Word> targets(theta, 0);
    for (std::size_t i = 0; i < theta; ++i) {
      for (std::size_t c = 0; c < p; ++c) {
        if (split.levels[i][blk.data_offset + c] == -1) targets[i] |= Word{1} << bit_of(p, c);
      }
    }
    const kernels::TupleMatch match = kernels::best_tuple(s.code.words(), targets);
    if (weight(match.disagreement) > generalized_radius) {
      throw InternalError("block " + std::to_string(b) + " needs " +
                          std::to_string(weight(match.disagreement)) +
                          " systematic nodes, more than the radius " +
                          std::to_string(generalized_radius));
    }
    for (std::size_t i = 0; i < theta; ++i) {
      const Word c = s.code.words()[match.indices[i]];
      const Rational& scale = split.scales[i];
      if (auto h = s.hat.index_of(c)) {
        builder.add(layout.coded_node(b, *h), scale);
      } else if (auto hc = s.hat.index_of(complement(c, p))) {
        builder.add(layout.coded_node(b, *hc), -scale);
      } else {
        throw InternalError("codeword has no hat representative");
      }
      const Word diff = targets[i] ^ c;
      for (std::size_t j = 0; j < p; ++j) {
        if (coordinate(diff, p, j)) {
          builder.add(layout.systematic_node(b, j),
                      scale * (2 * split.levels[i][blk.data_offset + j]));
        }
      }
    }
    bound += static_cast<std::size_t>(generalized_radius) + theta;
  }
  builder.add(layout.all_ones_node(), split.offset);
  return builder.finish(bound);
}

}  // namespace accred
