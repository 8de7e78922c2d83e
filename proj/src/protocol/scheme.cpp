#include "accred/error.hpp"
#include "accred/kernels.hpp"
#include "accred/protocol.hpp"

namespace accred {
namespace {

constexpr std::size_t kMaxTableLength = 20;

}  // namespace

BlockParameters ProtocolScheme::parameters() const {
  return BlockParameters{static_cast<long>(block_length), static_cast<long>(nodes_per_block()),
                         static_cast<long>(access_bound)};
}

std::vector<std::vector<int>> ProtocolScheme::encoding_matrix() const {
  std::vector<std::vector<int>> m(block_length, std::vector<int>(nodes_per_block(), 0));
  for (std::size_t j = 0; j < hat.size(); ++j) {
    for (std::size_t i = 0; i < block_length; ++i) {
      m[i][j] = coordinate(hat.words[j], block_length, i) ? -1 : 1;
    }
  }
  if (systematic) {
    for (std::size_t i = 0; i < block_length; ++i) m[i][hat.size() + i] = 1;
  }
  return m;
}

Word ProtocolScheme::nearest(Word v) const {
  if (!nearest_table.empty()) return code.words()[nearest_table[v]];
  return nearest_codeword(code, v);
}

ProtocolScheme build_scheme(const BinaryCode& code, const EnumerationLimits& limits) {
  if (code.empty()) throw DomainError("cannot build a scheme from an empty code");
  ProtocolScheme scheme;
  scheme.block_length = code.length();
  scheme.code = code;
  scheme.hat = hat_subcode(code);
  scheme.covering_radius = covering_radius(code, limits);
  scheme.access_bound = scheme.covering_radius + 1;
  scheme.systematic = true;
  if (code.length() <= kMaxTableLength) {
    scheme.nearest_table = kernels::nearest_table_parallel(code.words(), code.length());
  }
  return scheme;
}

ProtocolScheme build_nonsystematic_halfspace(int i) {
  if (i < 1) throw DomainError("non-systematic HalfSpace needs i >= 1");
  if (i > static_cast<int>(kMaxTableLength)) throw DomainError("HalfSpace index too large");
  ProtocolScheme scheme = build_scheme(full_space(static_cast<std::size_t>(i)));
  scheme.systematic = false;
  return scheme;
}

}  // namespace accred
