#include <algorithm>

#include "accred/error.hpp"
#include "accred/protocol.hpp"

namespace accred {

void StorageLayout::append(std::shared_ptr<const ProtocolScheme> scheme, std::size_t data_length) {
  Block block;
  block.data_offset = data_dimension_;
  block.node_offset = node_count_;
  block.data_length = scheme ? scheme->block_length : data_length;
  const std::size_t nodes = scheme ? scheme->nodes_per_block() : data_length;
  block.scheme = std::move(scheme);
  data_dimension_ += block.data_length;
  node_count_ += nodes;
  blocks_.push_back(std::move(block));
}

void StorageLayout::seal() { node_count_ += 1; }

StorageLayout StorageLayout::uniform(std::shared_ptr<const ProtocolScheme> scheme,
                                     std::size_t blocks) {
  if (!scheme) throw DomainError("layout needs a scheme");
  if (blocks == 0) throw DomainError("layout needs at least one block");
  StorageLayout layout;
  for (std::size_t b = 0; b < blocks; ++b) layout.append(scheme, 0);
  layout.seal();
  return layout;
}

StorageLayout StorageLayout::interleaved(std::shared_ptr<const ProtocolScheme> first,
                                         std::shared_ptr<const ProtocolScheme> second,
                                         std::size_t u, std::size_t v, std::size_t t) {
  if (!first || !second) throw DomainError("layout needs a scheme");
  if (u == 0 || v == 0 || t == 0) throw DomainError("interleaving counts must be positive");
  StorageLayout layout;
  for (std::size_t b = 0; b < u * t; ++b) layout.append(first, 0);
  for (std::size_t b = 0; b < v * t; ++b) layout.append(second, 0);
  layout.seal();
  return layout;
}

StorageLayout StorageLayout::uncoded(std::size_t k) {
  if (k == 0) throw DomainError("layout needs a positive dimension");
  StorageLayout layout;
  layout.append(nullptr, k);
  layout.seal();
  return layout;
}

std::size_t StorageLayout::coded_node(std::size_t block, std::size_t hat_index) const {
  const Block& b = blocks_.at(block);
  if (!b.scheme || hat_index >= b.scheme->coded_nodes()) {
    throw DomainError("no such coded node");
  }
  return b.node_offset + hat_index;
}

std::size_t StorageLayout::systematic_node(std::size_t block, std::size_t coord) const {
  const Block& b = blocks_.at(block);
  if (coord >= b.data_length) throw DomainError("coordinate outside block");
  if (!b.scheme) return b.node_offset + coord;
  if (!b.scheme->systematic) throw DomainError("non-systematic block has no systematic nodes");
  return b.node_offset + b.scheme->coded_nodes() + coord;
}

std::size_t StorageLayout::pm1_access_bound() const {
  std::size_t total = 0;
  for (const Block& b : blocks_) {
    total += b.scheme ? static_cast<std::size_t>(b.scheme->access_bound) : b.data_length;
  }
  return total;
}

std::vector<std::pair<std::size_t, int>> StorageLayout::encoding_row(std::size_t node) const {
  if (node >= node_count_) throw DomainError("node index out of range");
  std::vector<std::pair<std::size_t, int>> row;
  if (node == all_ones_node()) {
    for (std::size_t j = 0; j < data_dimension_; ++j) row.emplace_back(j, 1);
    return row;
  }
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), node,
                             [](std::size_t n, const Block& b) { return n < b.node_offset; });
  const Block& b = *std::prev(it);
  const std::size_t local = node - b.node_offset;
  if (!b.scheme) {
    row.emplace_back(b.data_offset + local, 1);
    return row;
  }
  const ProtocolScheme& s = *b.scheme;
  if (local < s.coded_nodes()) {
    const Word h = s.hat.words[local];
    for (std::size_t i = 0; i < s.block_length; ++i) {
      row.emplace_back(b.data_offset + i, coordinate(h, s.block_length, i) ? -1 : 1);
    }
  } else {
    row.emplace_back(b.data_offset + (local - s.coded_nodes()), 1);
  }
  return row;
}

}  // namespace accred
