#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lzc/factor.hpp"
#include "lzc/rmq.hpp"
#include "lzc/text_index.hpp"

namespace lzc {

// Per-block maxima of the reversed-text SA values, recorded during one BWT
// inversion, with a range-max index over the block array. Block k covers SA
// positions [(k-1)b+1, kb].
class BlockMaxima {
 public:
  BlockMaxima() = default;
  explicit BlockMaxima(const TextIndex& ti);

  uint32_t block_size() const { return b_; }
  size_t blocks() const { return maxima_ ? maxima_->size() : 0; }
  uint64_t max_at(size_t block) const { return maxima_->get(block - 1); }
  // Block index holding the maximal entry among blocks [k1, k2].
  size_t rmax_block(size_t k1, size_t k2) const { return rmax_.query(k1, k2); }

  size_t maxima_bits() const { return maxima_ ? maxima_->size() * maxima_->width() : 0; }
  size_t rmax_bits() const { return rmax_.size_in_bits(); }

 private:
  uint32_t b_ = 1;
  std::unique_ptr<PackedIntVector> maxima_;
  RmqIndex rmax_;
};

// One gate decision: was a factor of length j confirmed at start i?
struct GateProbe {
  uint64_t start;
  uint64_t len;
  bool pass;
};

struct LzAux {
  size_t block_size = 0;
  size_t block_maxima_bits = 0;
  size_t rmax_bits = 0;
  size_t visited_bits = 0;
  size_t candidate_bits = 0;
  size_t total_bits() const {
    return block_maxima_bits + rmax_bits + visited_bits + candidate_bits;
  }
};

struct LzParseResult {
  FactorList factors;
  size_t n = 0;
  size_t bwt_bits = 0;  // wavelet tree over the reversed-text BWT
  LzAux aux;
};

struct LzParseOptions {
  std::vector<GateProbe>* gate_trace = nullptr;
};

// Greedy leftmost-longest LZ77 parsing in compact working space: backward
// search over the FM-index of the reversed text, gated by block maxima plus
// the visited bitvector of a synchronized BWT inversion; sources resolved
// afterwards by one more inversion over the recorded candidate positions.
LzParseResult lz_parse(std::span<const uint8_t> text, const LzParseOptions& opts = {});

// Inverse of the parsing; self-referential overlaps copy left to right.
std::vector<uint8_t> lz_decode(const FactorList& factors);

}  // namespace lzc
