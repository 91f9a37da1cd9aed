#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lzc/bits.hpp"

namespace lzc {

// Plain bitvector with rank/select support. Immutable once built; all
// public positions and ordinals are 1-based. The rank index is a two-level
// sample hierarchy (absolute counts every 2048 bits, 16-bit relative counts
// every 256 bits) plus sampled select hints, keeping the index overhead
// well below 0.5 bits per stored bit.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(const std::vector<uint8_t>& bits);
  explicit BitVector(BitBuffer&& buf);
  BitVector(std::vector<uint64_t>&& words, size_t n_bits);

  size_t size() const { return n_; }
  bool get(size_t pos) const {  // 1-based
    size_t i = pos - 1;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  // Occurrences of bit c in positions 1..i (i = 0 gives 0).
  size_t rank(bool c, size_t i) const;
  // Smallest p with rank(c, p) = k; throws std::out_of_range if k exceeds
  // the number of c bits.
  size_t select(bool c, size_t k) const;
  // Some set position in [s, e]; s = e+1 denotes the empty range.
  std::optional<size_t> find_one_in_range(size_t s, size_t e) const;

  size_t count_ones() const { return ones_; }
  size_t size_in_bits() const;
  size_t index_overhead_bits() const;
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void build_index();
  size_t rank1(size_t i) const;  // 0-based: ones among bit indices [0, i)
  size_t select_impl(bool c, size_t k) const;

  static constexpr size_t kSuperBits = 2048;  // 32 words
  static constexpr size_t kBlockBits = 512;   // 8 words
  static constexpr size_t kSelectStride = 4096;
  static constexpr size_t kSelectSampleMin = size_t{1} << 15;
  static constexpr size_t kScanWords = 8;  // below this, rank/select scan

  std::vector<uint64_t> words_;
  size_t n_ = 0;
  size_t ones_ = 0;
  std::vector<uint64_t> super_;             // absolute rank1 at superblock starts
  std::vector<uint16_t> block_;             // rank1 relative to superblock start
  std::vector<uint64_t> select1_samples_;   // position (0-based) of every kSelectStride-th 1
  std::vector<uint64_t> select0_samples_;
};

}  // namespace lzc
