#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lzc/bit_vector.hpp"

namespace lzc {

// Stable partition of V by the p-th most significant bit of its k-bit
// codes: V0 keeps elements whose bit is 0, V1 the rest. Partition order
// within each 8-element block comes from a byte-indexed lookup table over
// the extracted bit plane.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>>
split_by_bit(std::span<const uint32_t> values, uint32_t code_width, uint32_t p);

// Balanced binary wavelet tree over symbols [0, sigma). Levelwise layout:
// one concatenated rank/select-indexed bitvector per level, nodes located
// by rank arithmetic during descent (no per-node pointers, empty leaves
// never materialize). All public positions are 1-based.
class WaveletTree {
 public:
  WaveletTree() = default;
  WaveletTree(std::span<const uint32_t> seq, uint32_t sigma);

  size_t size() const { return n_; }
  uint32_t sigma() const { return sigma_; }
  uint32_t depth() const { return depth_; }

  uint32_t access(size_t i) const;
  // Occurrences of c in positions 1..i.
  size_t rank(uint32_t c, size_t i) const;
  // Position of the k-th occurrence of c.
  size_t select(uint32_t c, size_t k) const;
  // Symbol at i together with its rank up to and including i.
  std::pair<uint32_t, size_t> access_and_rank(size_t i) const;

  // Among positions x in [x1, x2] with value v <= y2, one with maximal v;
  // the returned x is the leftmost occurrence of that value in the range.
  std::optional<std::pair<size_t, uint32_t>>
  range_pred(size_t x1, size_t x2, uint32_t y2) const;

  size_t size_in_bits() const;
  const BitVector& level(size_t d) const { return levels_[d]; }

 private:
  struct PathStep {
    size_t node_lo, node_hi;  // node interval at this level, 1-based
    size_t a, b;              // query range inside the node, node-local
  };
  size_t climb(const std::vector<PathStep>& path, const std::vector<bool>& bits,
               size_t leaf_local) const;

  uint32_t sigma_ = 0;
  uint32_t depth_ = 0;
  size_t n_ = 0;
  std::vector<BitVector> levels_;
};

}  // namespace lzc
