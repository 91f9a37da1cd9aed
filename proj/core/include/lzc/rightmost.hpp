#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lzc/elias_fano.hpp"
#include "lzc/factor.hpp"
#include "lzc/lz_parse.hpp"
#include "lzc/range_predecessor.hpp"
#include "lzc/text_index.hpp"

namespace lzc {

enum class RightmostMode { basic, stratified };

struct RightmostConfig {
  uint64_t ell = 0;    // long-factor threshold; 0 picks max(8, ceil(log2 n)^2)
  uint64_t r = 0;      // text sample stride; 0 picks max(2, ceil(log2 n))
  uint64_t block = 0;  // SA block size; 0 picks max(16, r^2 * min(sigma,16))
  RightmostMode mode = RightmostMode::stratified;
};

struct RightmostStats {
  size_t literals = 0;
  size_t long_factors = 0;
  size_t boundary_factors = 0;
  size_t inblock_factors = 0;
  uint64_t ell = 0, r = 0, block = 0;
};

struct RightmostResult {
  FactorList factors;
  RightmostStats stats;
};

// A reference phrase with its SA interval over the forward text.
struct PhraseQuery {
  uint64_t start;  // text position, 1-based
  uint64_t len;
  size_t sa_lo, sa_hi;
  uint32_t factor;  // index into the originating factor list
};

// Laminar family over the distinct query intervals with per-node rightmost
// text positions; resolves all queries in one pass over the suffixes in
// text order (BWT inversion in increasing text order via select).
class QueryTree {
 public:
  QueryTree(size_t n, std::span<const PhraseQuery> queries);

  // Rightmost prior occurrence start for each query (0 when none exists).
  std::vector<uint64_t> resolve(const TextIndex& ti);

  bool laminar_ok() const { return laminar_ok_; }
  size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    uint32_t lo, hi;
    int32_t parent = -1;
    int32_t first_child = -1, next_sib = -1;
    uint64_t p_max = 0;
  };
  uint64_t subtree_max(size_t v) const;

  size_t n_ = 0;
  bool laminar_ok_ = true;
  std::vector<Node> nodes_;
  std::vector<int32_t> nma_;                 // SA position -> deepest marked node
  std::vector<std::pair<uint64_t, std::pair<uint32_t, uint32_t>>> query_at_;  // (start, (node, query idx))
};

// The marked-tree scan applied to every reference phrase.
std::vector<uint64_t> rightmost_basic(const TextIndex& ti, std::span<const PhraseQuery> queries);

// Rightmost sources for factors of length >= ell: every r-th text position
// is a split point; a table of reversed r-blocks sorted lexicographically
// (built with a string-reversal lookup table) plus a dyadic stack of 2D
// range structures answer, per alignment offset, the latest split point
// whose block tail matches the phrase head and whose following suffix
// continues with the phrase tail.
class LongFactorIndex {
 public:
  LongFactorIndex(const TextIndex& fwd, uint64_t r, uint64_t ell);

  uint64_t query(const TextIndex& fwd, uint64_t start, uint64_t len) const;

  size_t table_entries() const { return order_.size(); }

 private:
  struct Stratum {
    std::vector<uint32_t> xs;         // table ranks, sorted
    std::vector<uint32_t> ys_sorted;  // suffix ranks, ascending
    WaveletTree wt;                   // per-node y ranks (0-based) in xs order
  };
  bool box_nonempty(const Stratum& s, size_t x1, size_t x2, size_t y1, size_t y2) const;
  int64_t max_block_rec(size_t node, size_t lo, size_t hi, size_t zmax,
                        size_t x1, size_t x2, size_t y1, size_t y2) const;
  int cmp_prefix(uint32_t block_id, const PackedIntVector& probe, size_t d) const;

  uint64_t r_ = 0, ell_ = 0;
  size_t k_ = 0;       // number of full blocks
  size_t leaves_ = 0;  // power-of-two leaf span of the dyadic tree
  uint32_t field_width_ = 8;
  PackedIntVector revblocks_;     // K reversed blocks, r fields each
  std::vector<uint32_t> order_;   // block ids sorted by reversed content
  std::vector<uint32_t> rank_of_; // block id -> position in order_
  std::vector<std::unique_ptr<Stratum>> strata_;  // 2k_ dyadic nodes
};

// Reverses the fields of a packed array via 16-bit window lookups;
// 16 % width must be 0.
PackedIntVector reverse_packed_fields(const PackedIntVector& in, uint32_t width);
const uint16_t* reverse16_table(uint32_t width);

// Per-SA-block range-predecessor structures for short factors whose
// interval stays inside one block; y coordinates are rank-reduced per block
// through an Elias-Fano map.
class BlockPredIndex {
 public:
  BlockPredIndex(const TextIndex& ti, size_t block_size, uint32_t rp_c = 2);

  // Rightmost text position < before among suffixes in SA[sa_lo..sa_hi]
  // (the interval must not cross a block boundary).
  std::optional<uint64_t> query(size_t sa_lo, size_t sa_hi, uint64_t before) const;

  size_t block_size() const { return B_; }

 private:
  struct Block {
    std::vector<uint32_t> sa_pos;  // sorted SA positions of the block's points
    std::unique_ptr<RangePredIndex> rp;
    EliasFanoSeq ys;
  };
  size_t B_ = 0;
  std::vector<Block> blocks_;
};

// Boundaries identical to lz_parse with every reference source replaced by
// its rightmost admissible position. Stratified mode routes long,
// boundary-crossing and in-block factors to the three sub-solvers.
RightmostResult rightmost_parse(std::span<const uint8_t> text, RightmostConfig cfg = {});

}  // namespace lzc
