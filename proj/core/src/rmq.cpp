#include "lzc/rmq.hpp"

#include <array>
#include <bit>
#include <memory>
#include <stdexcept>

namespace lzc {

ValueView ValueView::of(const std::vector<int64_t>& v) {
  return ValueView{
      &v,
      [](const void* ctx, size_t i) {
        return (*static_cast<const std::vector<int64_t>*>(ctx))[i];
      },
      v.size()};
}

ValueView ValueView::of_packed(const PackedIntVector& v, bool complement) {
  if (!complement) {
    return ValueView{
        &v,
        [](const void* ctx, size_t i) {
          return static_cast<int64_t>(static_cast<const PackedIntVector*>(ctx)->get(i));
        },
        v.size()};
  }
  return ValueView{
      &v,
      [](const void* ctx, size_t i) {
        const auto* p = static_cast<const PackedIntVector*>(ctx);
        return static_cast<int64_t>(p->mask() - p->get(i));
      },
      v.size()};
}

RmqIndex::RmqIndex(ValueView view) : view_(view) {
  size_t n = view_.size;
  n_blocks_ = (n + kBlock - 1) / kBlock;
  if (n_blocks_ == 0) return;
  levels_ = 1;
  while ((size_t{1} << levels_) <= n_blocks_) ++levels_;
  table_.assign(levels_ * n_blocks_, 0);
  for (size_t b = 0; b < n_blocks_; ++b) {
    size_t lo = b * kBlock, hi = std::min(n - 1, lo + kBlock - 1);
    table_[b] = static_cast<uint32_t>(argmin_scan(lo, hi));
  }
  for (size_t lv = 1; lv < levels_; ++lv) {
    size_t span = size_t{1} << lv;
    for (size_t b = 0; b + span <= n_blocks_; ++b) {
      uint32_t x = table_[(lv - 1) * n_blocks_ + b];
      uint32_t y = table_[(lv - 1) * n_blocks_ + b + span / 2];
      int64_t vx = view_[x], vy = view_[y];
      table_[lv * n_blocks_ + b] = (vy < vx || (vy == vx && y < x)) ? y : x;
    }
  }
}

size_t RmqIndex::argmin_scan(size_t a, size_t b) const {
  size_t best = a;
  int64_t bv = view_[a];
  for (size_t i = a + 1; i <= b; ++i) {
    int64_t v = view_[i];
    if (v < bv) { bv = v; best = i; }
  }
  return best;
}

size_t RmqIndex::query(size_t i, size_t j) const {
  if (i < 1 || i > j || j > view_.size) throw std::out_of_range("RmqIndex::query: bad range");
  size_t a = i - 1, b = j - 1;
  size_t ba = a / kBlock, bb = b / kBlock;
  if (bb - ba <= 1) return argmin_scan(a, b) + 1;
  size_t best = argmin_scan(a, (ba + 1) * kBlock - 1);
  int64_t bv = view_[best];
  // central whole blocks (ba+1 .. bb-1)
  size_t cl = ba + 1, cr = bb - 1;
  size_t len = cr - cl + 1;
  size_t k = static_cast<size_t>(std::bit_width(len)) - 1;
  uint32_t m1 = table_[k * n_blocks_ + cl];
  uint32_t m2 = table_[k * n_blocks_ + cr - (size_t{1} << k) + 1];
  uint32_t mc = (view_[m2] < view_[m1] || (view_[m2] == view_[m1] && m2 < m1)) ? m2 : m1;
  if (view_[mc] < bv) { bv = view_[mc]; best = mc; }
  size_t tail = argmin_scan(bb * kBlock, b);
  if (view_[tail] < bv) best = tail;
  return best + 1;
}

Rmq::Rmq(std::vector<int64_t> values)
    : values_(std::make_unique<std::vector<int64_t>>(std::move(values))) {
  idx_ = RmqIndex(ValueView::of(*values_));
}

const uint8_t* argmin16_table(uint32_t width) {
  static std::array<std::unique_ptr<std::array<uint8_t, 65536>>, 9> tables;
  auto& slot = tables[width];
  if (!slot) {
    auto t = std::make_unique<std::array<uint8_t, 65536>>();
    uint32_t per = 16 / width;
    uint32_t mask = (width == 16) ? 0xffffu : ((1u << width) - 1);
    for (uint32_t w = 0; w < 65536; ++w) {
      uint32_t best = 0, bv = w & mask;
      for (uint32_t s = 1; s < per; ++s) {
        uint32_t v = (w >> (s * width)) & mask;
        if (v < bv) { bv = v; best = s; }
      }
      (*t)[w] = static_cast<uint8_t>(best);
    }
    slot = std::move(t);
  }
  return slot->data();
}

SampledRmq::SampledRmq(std::vector<int64_t> values, size_t block_size)
    : owned_(std::make_unique<std::vector<int64_t>>(std::move(values))),
      block_(block_size ? block_size : 1) {
  view_ = ValueView::of(*owned_);
  build();
}

SampledRmq::SampledRmq(const PackedIntVector* packed, bool complement, size_t block_size)
    : packed_(packed), complement_(complement), block_(block_size ? block_size : 1) {
  view_ = ValueView::of_packed(*packed, complement);
  uint32_t w = packed->width();
  table_path_ = (w == 1 || w == 2 || w == 4 || w == 8) && block_ * w <= 16;
  build();
}

void SampledRmq::build() {
  size_t n = view_.size;
  size_t nb = (n + block_ - 1) / block_;
  if (packed_) {
    reduced_packed_ = std::make_unique<PackedIntVector>(nb, packed_->width());
    for (size_t b = 0; b < nb; ++b) {
      size_t lo = b * block_, hi = std::min(n, lo + block_) - 1;
      int64_t m = view_[lo];
      for (size_t i = lo + 1; i <= hi; ++i) m = std::min(m, view_[i]);
      reduced_packed_->set(b, static_cast<uint64_t>(m));
    }
    reduced_ = RmqIndex(ValueView::of_packed(*reduced_packed_));
    return;
  }
  reduced_vals_ = std::make_unique<std::vector<int64_t>>(nb);
  for (size_t b = 0; b < nb; ++b) {
    size_t lo = b * block_, hi = std::min(n, lo + block_) - 1;
    int64_t m = view_[lo];
    for (size_t i = lo + 1; i <= hi; ++i) m = std::min(m, view_[i]);
    (*reduced_vals_)[b] = m;
  }
  reduced_ = RmqIndex(ValueView::of(*reduced_vals_));
}

size_t SampledRmq::argmin_in_block(size_t block, size_t a, size_t b) const {
  if (table_path_) {
    size_t lo = block * block_;
    // full in-range block: table lookup over the packed 16-bit window
    if (a == lo && b == lo + block_ - 1 && b < packed_->size()) {
      uint32_t w = packed_->width();
      uint16_t win = static_cast<uint16_t>(packed_->read_window(lo));
      if (block_ * w < 16) win &= static_cast<uint16_t>((1u << (block_ * w)) - 1);
      if (complement_) win = static_cast<uint16_t>(~win & ((block_ * w < 16) ? ((1u << (block_ * w)) - 1) : 0xffffu));
      return lo + argmin16_table(w)[win];
    }
  }
  size_t best = a;
  int64_t bv = view_[a];
  for (size_t i = a + 1; i <= b; ++i) {
    int64_t v = view_[i];
    if (v < bv) { bv = v; best = i; }
  }
  return best;
}

size_t SampledRmq::query(size_t i, size_t j) const {
  if (i < 1 || i > j || j > view_.size) throw std::out_of_range("SampledRmq::query: bad range");
  size_t a = i - 1, b = j - 1;
  size_t ba = a / block_, bb = b / block_;
  if (bb - ba <= 1) {
    if (ba == bb) return argmin_in_block(ba, a, b) + 1;
    size_t m1 = argmin_in_block(ba, a, (ba + 1) * block_ - 1);
    size_t m2 = argmin_in_block(bb, bb * block_, b);
    return (view_[m2] < view_[m1] ? m2 : m1) + 1;
  }
  size_t best = argmin_in_block(ba, a, (ba + 1) * block_ - 1);
  int64_t bv = view_[best];
  size_t cb = reduced_.query(ba + 2, bb) - 1;  // central block index
  size_t clo = cb * block_;
  size_t chi = std::min(view_.size, clo + block_) - 1;
  size_t mc = argmin_in_block(cb, clo, chi);
  if (view_[mc] < bv) { bv = view_[mc]; best = mc; }
  size_t tail = argmin_in_block(bb, bb * block_, b);
  if (view_[tail] < bv) best = tail;
  return best + 1;
}

size_t SampledRmq::size_in_bits() const {
  size_t bits = reduced_.size_in_bits() + 64;
  if (reduced_vals_) bits += reduced_vals_->size() * 64;
  if (reduced_packed_) bits += reduced_packed_->size() * reduced_packed_->width() + 64;
  if (owned_) bits += owned_->size() * 64;
  return bits;
}

}  // namespace lzc
