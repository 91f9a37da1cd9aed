#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lzc/bit_vector.hpp"
#include "lzc/bits.hpp"

namespace lzc {

// Elias-Fano encoding of a strictly increasing sequence of keys from
// [1, u], generalized with a bucket-count parameter v: a packed array of
// low bit tails plus a bitvector of n ones and v zeros (per bucket, its
// keys' ones followed by one terminating zero). u and v round up to powers
// of two internally. select is O(1); rank narrows the search window with a
// sampled predecessor accelerator (every ceil(log2 u)^2-th key indexed by a
// coarse value grid) and finishes with a short binary search over select.
class EliasFanoSeq {
 public:
  EliasFanoSeq() = default;
  EliasFanoSeq(std::span<const uint64_t> keys, uint64_t u, uint64_t v);

  // k-th smallest key, 1-based.
  uint64_t select(size_t k) const;
  // Number of keys <= q, 0 <= q <= universe.
  size_t rank(uint64_t q) const;

  size_t size() const { return n_; }
  uint64_t universe() const { return universe_; }
  uint64_t buckets() const { return buckets_; }
  uint32_t low_width() const { return low_width_; }

  size_t size_in_bits() const;
  void canonical_bytes(std::vector<uint8_t>& out) const;

  // Assembles a sequence from prebuilt parts (the bit-parallel builder's
  // output); low must hold (key-1) & (2^low_width - 1) per key and high the
  // bucketed unary layout described above.
  static EliasFanoSeq from_parts(PackedIntVector low, BitBuffer high, size_t n,
                                 uint64_t universe, uint64_t buckets);

 private:
  void build_samples();

  uint64_t universe_ = 1;
  uint64_t buckets_ = 1;
  uint32_t low_width_ = 0;
  size_t n_ = 0;
  PackedIntVector low_;
  BitVector high_;
  uint32_t sample_stride_ = 0;
  uint64_t grid_cell_ = 0;
  PackedIntVector samples_;  // every stride-th key, minimal width
  std::vector<uint32_t> grid_;
};

// Per-character Elias-Fano position sets over a sequence: E_c holds the
// positions of symbol c, each encoded with v = n/sigma buckets so rank,
// select and in-range occurrence probes run on any character.
class CharPredecessorSet {
 public:
  CharPredecessorSet() = default;

  static CharPredecessorSet build_simple(std::span<const uint32_t> seq, uint32_t sigma);
  // sigma must be a power of two; log2(sigma) table-driven splitting phases
  // peel one symbol bit each, maintaining Elias-Fano triples per
  // sub-alphabet throughout.
  static CharPredecessorSet build_bitparallel(std::span<const uint32_t> seq, uint32_t sigma);

  uint32_t sigma() const { return sigma_; }
  size_t size() const { return n_; }

  // Occurrences of c in positions 1..i.
  size_t rank(uint32_t c, size_t i) const { return per_char_[c].rank(i); }
  // Position of the k-th occurrence of c.
  size_t select(uint32_t c, size_t k) const { return per_char_[c].select(k); }
  size_t count(uint32_t c) const { return per_char_[c].size(); }
  // Leftmost and rightmost occurrence of c within [x1, x2].
  std::optional<std::pair<size_t, size_t>> range_occ(uint32_t c, size_t x1, size_t x2) const;

  size_t size_in_bits() const;
  std::vector<uint8_t> canonical_bytes() const;

 private:
  static void ef_params(size_t n, uint32_t sigma, uint64_t& u, uint64_t& v);

  uint32_t sigma_ = 0;
  size_t n_ = 0;
  std::vector<EliasFanoSeq> per_char_;
};

}  // namespace lzc
