#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lzc/bits.hpp"

namespace lzc {

// Type-erased read-only view over an integer array; lets RMQ structures
// index packed or negated sequences without copying them. The viewed
// object's address must stay stable for the lifetime of the view.
struct ValueView {
  const void* ctx = nullptr;
  int64_t (*get)(const void*, size_t) = nullptr;
  size_t size = 0;

  int64_t operator[](size_t i) const { return get(ctx, i); }

  static ValueView of(const std::vector<int64_t>& v);
  // complement=true yields (2^width - 1) - value, turning range-min into
  // range-max while staying inside the packed alphabet.
  static ValueView of_packed(const PackedIntVector& v, bool complement = false);
};

// Range-minimum index: block decomposition with a sparse table over block
// minima. O(n)-ish build, short in-block scans at query time. Ties resolve
// to the leftmost index. Positions are 1-based; the view is not owned.
class RmqIndex {
 public:
  RmqIndex() = default;
  explicit RmqIndex(ValueView view);

  // Index m with i <= m <= j and view[m-1] minimal, leftmost on ties.
  size_t query(size_t i, size_t j) const;

  size_t size() const { return view_.size; }
  size_t size_in_bits() const { return table_.size() * 32 + 64; }

 private:
  static constexpr size_t kBlock = 16;
  size_t argmin_scan(size_t a, size_t b) const;  // 0-based inclusive

  ValueView view_;
  size_t n_blocks_ = 0;
  size_t levels_ = 0;
  std::vector<uint32_t> table_;  // levels x n_blocks, element positions
};

// Owning convenience wrapper matching the plain build-from-array surface.
// Storage is heap-anchored so the structure stays movable.
class Rmq {
 public:
  Rmq() = default;
  explicit Rmq(std::vector<int64_t> values);
  size_t query(size_t i, size_t j) const { return idx_.query(i, j); }
  size_t size() const { return values_ ? values_->size() : 0; }
  int64_t value_at(size_t pos) const { return (*values_)[pos - 1]; }
  size_t size_in_bits() const { return size() * 64 + idx_.size_in_bits(); }

 private:
  std::unique_ptr<std::vector<int64_t>> values_;
  RmqIndex idx_;
};

// Block-sampled RMQ: a reduced RmqIndex over per-block minima plus head and
// tail handling inside single blocks. When the underlying sequence is a
// packed small-alphabet array whose block fits a 16-bit window, head/tail
// minima come from a lookup table over the packed block; otherwise a short
// scan is used.
class SampledRmq {
 public:
  SampledRmq() = default;
  // General form: owns a copy of the values.
  SampledRmq(std::vector<int64_t> values, size_t block_size);
  // Packed form over an externally owned array (complement for range-max).
  SampledRmq(const PackedIntVector* packed, bool complement, size_t block_size);

  size_t query(size_t i, size_t j) const;  // 1-based, leftmost min
  size_t size() const { return view_.size; }
  size_t block_size() const { return block_; }
  size_t size_in_bits() const;

 private:
  void build();
  size_t argmin_in_block(size_t block, size_t a, size_t b) const;  // 0-based

  std::unique_ptr<std::vector<int64_t>> owned_;
  const PackedIntVector* packed_ = nullptr;
  bool complement_ = false;
  bool table_path_ = false;
  ValueView view_;
  size_t block_ = 1;
  std::unique_ptr<std::vector<int64_t>> reduced_vals_;     // general path
  std::unique_ptr<PackedIntVector> reduced_packed_;        // packed path
  RmqIndex reduced_;
};

// Argmin-in-packed-window table for a given element width (1, 2, 4 or 8
// bits): maps a 16-bit window to the leftmost minimum slot.
const uint8_t* argmin16_table(uint32_t width);

}  // namespace lzc
