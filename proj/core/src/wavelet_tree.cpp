#include "lzc/wavelet_tree.hpp"

#include <bit>
#include <stdexcept>

namespace lzc {

std::pair<std::vector<uint32_t>, std::vector<uint32_t>>
split_by_bit(std::span<const uint32_t> values, uint32_t code_width, uint32_t p) {
  if (p < 1 || p > code_width) throw std::out_of_range("split_by_bit: bit position out of range");
  uint32_t shift = code_width - p;
  const uint64_t* part = partition8_table();
  std::vector<uint32_t> v0, v1;
  v0.reserve(values.size());
  v1.reserve(values.size());
  size_t i = 0;
  for (; i + 8 <= values.size(); i += 8) {
    uint32_t plane = 0;
    for (uint32_t j = 0; j < 8; ++j) plane |= ((values[i + j] >> shift) & 1u) << j;
    uint64_t entry = part[plane];
    uint32_t zeros = static_cast<uint32_t>(entry >> 32);
    for (uint32_t s = 0; s < zeros; ++s) v0.push_back(values[i + ((entry >> (4 * s)) & 15)]);
    for (uint32_t s = zeros; s < 8; ++s) v1.push_back(values[i + ((entry >> (4 * s)) & 15)]);
  }
  for (; i < values.size(); ++i) {
    if ((values[i] >> shift) & 1u) v1.push_back(values[i]); else v0.push_back(values[i]);
  }
  return {std::move(v0), std::move(v1)};
}

WaveletTree::WaveletTree(std::span<const uint32_t> seq, uint32_t sigma) {
  if (sigma < 1) throw std::invalid_argument("WaveletTree: sigma must be >= 1");
  for (uint32_t v : seq)
    if (v >= sigma) throw std::invalid_argument("WaveletTree: symbol out of alphabet");
  sigma_ = sigma;
  n_ = seq.size();
  depth_ = (sigma <= 1) ? 0 : bit_width_u64(sigma - 1);
  if (depth_ == 0) return;
  levels_.reserve(depth_);
  // node sequences at the current level, in label order
  std::vector<std::vector<uint32_t>> nodes;
  nodes.emplace_back(seq.begin(), seq.end());
  for (uint32_t d = 0; d < depth_; ++d) {
    BitBuffer level_bits;
    uint32_t shift = depth_ - 1 - d;
    std::vector<std::vector<uint32_t>> next;
    next.reserve(nodes.size() * 2);
    for (auto& node : nodes) {
      for (uint32_t v : node) level_bits.append_bit((v >> shift) & 1u);
      if (d + 1 < depth_) {
        auto [v0, v1] = split_by_bit(node, depth_, d + 1);
        // empty nodes contribute nothing to any deeper level
        if (!v0.empty()) next.push_back(std::move(v0));
        if (!v1.empty()) next.push_back(std::move(v1));
      }
      node.clear();
      node.shrink_to_fit();
    }
    levels_.emplace_back(std::move(level_bits));
    nodes = std::move(next);
  }
}

uint32_t WaveletTree::access(size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("WaveletTree::access");
  if (depth_ == 0) return 0;
  size_t lo = 1, hi = n_;
  size_t pos = i;  // node-local
  uint32_t sym = 0;
  for (uint32_t d = 0; d < depth_; ++d) {
    const BitVector& bv = levels_[d];
    bool bit = bv.get(lo - 1 + pos);
    size_t r0_before = bv.rank(false, lo - 1);
    size_t zeros = bv.rank(false, hi) - r0_before;
    size_t r = bv.rank(bit, lo - 1 + pos) - bv.rank(bit, lo - 1);
    sym = (sym << 1) | (bit ? 1u : 0u);
    if (bit) { lo = lo + zeros; pos = r; } else { hi = lo + zeros - 1; pos = r; }
  }
  return sym;
}

std::pair<uint32_t, size_t> WaveletTree::access_and_rank(size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("WaveletTree::access_and_rank");
  if (depth_ == 0) return {0, i};
  size_t lo = 1, hi = n_;
  size_t pos = i;
  uint32_t sym = 0;
  for (uint32_t d = 0; d < depth_; ++d) {
    const BitVector& bv = levels_[d];
    bool bit = bv.get(lo - 1 + pos);
    size_t zeros = bv.rank(false, hi) - bv.rank(false, lo - 1);
    size_t r = bv.rank(bit, lo - 1 + pos) - bv.rank(bit, lo - 1);
    sym = (sym << 1) | (bit ? 1u : 0u);
    if (bit) { lo = lo + zeros; pos = r; } else { hi = lo + zeros - 1; pos = r; }
  }
  return {sym, pos};
}

size_t WaveletTree::rank(uint32_t c, size_t i) const {
  if (c >= sigma_) throw std::out_of_range("WaveletTree::rank: symbol out of alphabet");
  if (i > n_) throw std::out_of_range("WaveletTree::rank: position out of range");
  if (i == 0) return 0;
  if (depth_ == 0) return i;
  size_t lo = 1, hi = n_;
  size_t pos = i;
  for (uint32_t d = 0; d < depth_; ++d) {
    const BitVector& bv = levels_[d];
    bool bit = (c >> (depth_ - 1 - d)) & 1u;
    size_t zeros = bv.rank(false, hi) - bv.rank(false, lo - 1);
    size_t r = bv.rank(bit, lo - 1 + pos) - bv.rank(bit, lo - 1);
    if (bit) lo = lo + zeros; else hi = lo + zeros - 1;
    pos = r;
    if (pos == 0) return 0;
    if (lo > hi) return 0;
  }
  return pos;
}

size_t WaveletTree::select(uint32_t c, size_t k) const {
  if (c >= sigma_) throw std::out_of_range("WaveletTree::select: symbol out of alphabet");
  if (k < 1) throw std::out_of_range("WaveletTree::select: ordinal out of range");
  if (depth_ == 0) {
    if (k > n_) throw std::out_of_range("WaveletTree::select: ordinal out of range");
    return k;
  }
  std::vector<PathStep> path(depth_);
  std::vector<bool> bits(depth_);
  size_t lo = 1, hi = n_;
  for (uint32_t d = 0; d < depth_; ++d) {
    if (lo > hi) throw std::out_of_range("WaveletTree::select: ordinal out of range");
    const BitVector& bv = levels_[d];
    bool bit = (c >> (depth_ - 1 - d)) & 1u;
    path[d] = {lo, hi, 0, 0};
    bits[d] = bit;
    size_t zeros = bv.rank(false, hi) - bv.rank(false, lo - 1);
    if (bit) lo = lo + zeros; else hi = lo + zeros - 1;
  }
  if (lo > hi || k > hi - lo + 1) throw std::out_of_range("WaveletTree::select: ordinal out of range");
  return climb(path, bits, k);
}

size_t WaveletTree::climb(const std::vector<PathStep>& path, const std::vector<bool>& bits,
                          size_t leaf_local) const {
  size_t q = leaf_local;
  for (size_t d = depth_; d-- > 0;) {
    const BitVector& bv = levels_[d];
    bool bit = bits[d];
    size_t node_lo = path[d].node_lo;
    size_t before = bv.rank(bit, node_lo - 1);
    size_t global = bv.select(bit, before + q);
    q = global - node_lo + 1;
  }
  return q;
}

std::optional<std::pair<size_t, uint32_t>>
WaveletTree::range_pred(size_t x1, size_t x2, uint32_t y2) const {
  if (x1 < 1 || x1 > x2 || x2 > n_) throw std::out_of_range("WaveletTree::range_pred: bad range");
  if (depth_ == 0) return std::make_pair(x1, 0u);
  if (y2 >= sigma_) y2 = sigma_ - 1;
  std::vector<PathStep> path;
  path.reserve(depth_);
  // Phase 1: follow y2's bits while the range stays nonempty, remembering
  // the deepest level where a 0-branch refinement exists under bit 1.
  size_t lo = 1, hi = n_;
  size_t a = x1, b = x2;
  int pivot = -1;
  uint32_t d = 0;
  for (; d < depth_; ++d) {
    const BitVector& bv = levels_[d];
    bool bit = (y2 >> (depth_ - 1 - d)) & 1u;
    path.push_back({lo, hi, a, b});
    size_t r0n = bv.rank(false, lo - 1);
    size_t zeros = bv.rank(false, hi) - r0n;
    size_t lo0 = bv.rank(false, lo - 1 + a - 1) - r0n;  // 0s strictly before a
    size_t hi0 = bv.rank(false, lo - 1 + b) - r0n;      // 0s up to b
    size_t lo1 = (a - 1) - lo0, hi1 = b - hi0;
    if (bit && hi0 > lo0) pivot = static_cast<int>(d);
    size_t cl = bit ? lo1 : lo0, ch = bit ? hi1 : hi0;
    if (ch <= cl) break;  // y2's bit absent in range
    if (bit) { lo = lo + zeros; } else { hi = lo + zeros - 1; }
    a = cl + 1; b = ch;
  }
  std::vector<bool> bits(depth_);
  if (d == depth_) {
    // exact value y2 occurs in the range
    for (uint32_t j = 0; j < depth_; ++j) bits[j] = (y2 >> (depth_ - 1 - j)) & 1u;
    return std::make_pair(climb(path, bits, a), y2);
  }
  if (pivot < 0) return std::nullopt;
  // Phase 2: take the 0-branch at the pivot, then complete greedily with
  // the largest nonempty branch, and climb back up for the position.
  path.resize(pivot + 1);
  for (uint32_t j = 0; j < static_cast<uint32_t>(pivot); ++j)
    bits[j] = (y2 >> (depth_ - 1 - j)) & 1u;
  uint32_t value = y2 >> (depth_ - pivot);
  lo = path[pivot].node_lo; hi = path[pivot].node_hi;
  a = path[pivot].a; b = path[pivot].b;
  bool forced_bit = false;  // pivot level takes the 0 branch
  for (uint32_t lev = static_cast<uint32_t>(pivot); lev < depth_; ++lev) {
    const BitVector& bv = levels_[lev];
    size_t r0n = bv.rank(false, lo - 1);
    size_t zeros = bv.rank(false, hi) - r0n;
    size_t lo0 = bv.rank(false, lo - 1 + a - 1) - r0n;
    size_t hi0 = bv.rank(false, lo - 1 + b) - r0n;
    size_t lo1 = (a - 1) - lo0, hi1 = b - hi0;
    bool bit;
    if (lev == static_cast<uint32_t>(pivot)) {
      bit = false;
    } else {
      bit = hi1 > lo1;  // prefer the 1-branch when nonempty
      path.push_back({lo, hi, a, b});
    }
    (void)forced_bit;
    bits[lev] = bit;
    value = (value << 1) | (bit ? 1u : 0u);
    size_t cl = bit ? lo1 : lo0, ch = bit ? hi1 : hi0;
    if (bit) { lo = lo + zeros; } else { hi = lo + zeros - 1; }
    a = cl + 1; b = ch;
  }
  return std::make_pair(climb(path, bits, a), value);
}

size_t WaveletTree::size_in_bits() const {
  size_t bits = 64;
  for (const auto& l : levels_) bits += l.size_in_bits();
  return bits;
}

}  // namespace lzc
