#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lzc/elias_fano.hpp"
#include "lzc/rmq.hpp"
#include "lzc/wavelet_tree.hpp"

namespace lzc {

// n points on the [1,n] x [1,n] grid in rank space: y_of_x and x_of_y are
// mutually inverse permutations.
struct PointSet {
  std::vector<uint32_t> y_of_x;

  static PointSet from_y_of_x(std::vector<uint32_t> y);  // validates
};

// One node of the granularity tree: the chunk sequence routed here plus its
// wavelet tree, per-chunk predecessor sets and sampled range-min/max.
struct RpNode {
  uint32_t width = 0;
  PackedIntVector chunks;
  WaveletTree wt;
  CharPredecessorSet cps;
  SampledRmq rmin, rmax;
  std::vector<std::pair<uint32_t, uint32_t>> children;  // chunk value -> node id

  size_t size_in_bits() const;
  uint32_t child(uint32_t chunk) const;  // UINT32_MAX if absent
};

// Range-predecessor index: a tree over the bits of the y-codes whose level
// chunk widths follow a c-tier plan (c=1 degenerates to one wavelet tree,
// c=2 uses ceil(sqrt(W))-bit chunks). Queries run in two phases: descend
// matching y2's chunks gated by range minima, then complete the answer with
// one wavelet-tree predecessor step and range maxima.
class RangePredIndex {
 public:
  RangePredIndex() = default;
  RangePredIndex(const PointSet& points, uint32_t c);

  size_t n() const { return n_; }
  uint32_t granularity() const { return c_; }
  const std::vector<uint32_t>& level_widths() const { return widths_; }
  size_t node_count() const { return nodes_.size(); }
  const RpNode& node(size_t id) const { return *nodes_[id]; }

  // Point (x, y) with x1 <= x <= x2, y <= y2 and y maximal.
  std::optional<std::pair<uint32_t, uint32_t>>
  query(size_t x1, size_t x2, size_t y2) const;

  // Points in the box [x1,x2] x [y1,y2] by decreasing y, at most `limit`.
  std::vector<std::pair<uint32_t, uint32_t>>
  report_sorted(size_t x1, size_t x2, size_t y1, size_t y2, size_t limit) const;

  size_t size_in_bits() const;

 private:
  static std::vector<uint32_t> plan_widths(uint32_t code_width, uint32_t c);

  size_t n_ = 0;
  uint32_t c_ = 1;
  uint32_t code_width_ = 1;
  std::vector<uint32_t> widths_;
  std::vector<uint32_t> x_of_y_;
  std::vector<std::unique_ptr<RpNode>> nodes_;
};

}  // namespace lzc
