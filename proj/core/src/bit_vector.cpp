#include "lzc/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace lzc {

BitVector::BitVector(const std::vector<uint8_t>& bits) {
  n_ = bits.size();
  words_.assign((n_ + 63) / 64 + 1, 0);
  for (size_t i = 0; i < n_; ++i)
    if (bits[i]) words_[i >> 6] |= uint64_t{1} << (i & 63);
  build_index();
}

BitVector::BitVector(BitBuffer&& buf) {
  n_ = buf.size();
  words_ = std::move(buf).take_words();
  words_.resize((n_ + 63) / 64 + 1, 0);
  build_index();
}

BitVector::BitVector(std::vector<uint64_t>&& words, size_t n_bits) {
  n_ = n_bits;
  words_ = std::move(words);
  words_.resize((n_ + 63) / 64 + 1, 0);
  if (n_ & 63) words_[n_ >> 6] &= (uint64_t{1} << (n_ & 63)) - 1;
  build_index();
}

void BitVector::build_index() {
  size_t n_words = (n_ + 63) / 64;
  ones_ = 0;
  for (size_t w = 0; w < n_words; ++w) ones_ += static_cast<size_t>(std::popcount(words_[w]));
  if (n_words <= kScanWords) return;  // short vectors: plain scans, no index
  size_t n_super = (n_words + 31) / 32 + 1;
  size_t fill_words = (n_super - 1) * 32;
  size_t n_block = fill_words / 8 + 1;
  super_.assign(n_super, 0);
  block_.assign(n_block, 0);
  bool sample = n_ >= kSelectSampleMin;
  size_t acc = 0;
  size_t next1 = 1, next0 = 1;
  for (size_t w = 0; w < fill_words; ++w) {
    if (w % 32 == 0) super_[w / 32] = acc;
    if (w % 8 == 0) block_[w / 8] = static_cast<uint16_t>(acc - super_[w / 32]);
    if (w >= n_words) continue;
    uint64_t word = words_[w];
    size_t pc = static_cast<size_t>(std::popcount(word));
    if (sample) {
      size_t zeros_before = w * 64 - acc;
      if (acc < next1 && acc + pc >= next1) {
        size_t k = next1 - acc;
        while (k <= pc) {
          uint32_t b = select_in_word(word, static_cast<uint32_t>(k));
          select1_samples_.push_back(w * 64 + b);
          next1 += kSelectStride;
          k += kSelectStride;
        }
      }
      size_t zc = 64 - pc;
      if (zeros_before < next0 && zeros_before + zc >= next0) {
        size_t k = next0 - zeros_before;
        while (k <= zc) {
          uint32_t b = select_in_word(~word, static_cast<uint32_t>(k));
          select0_samples_.push_back(w * 64 + b);
          next0 += kSelectStride;
          k += kSelectStride;
        }
      }
    }
    acc += pc;
  }
  super_[n_super - 1] = acc;
}

size_t BitVector::rank1(size_t i) const {
  size_t w = i >> 6;
  size_t r = 0, j = 0;
  if (!super_.empty()) {
    r = super_[w / 32] + block_[w / 8];
    j = (w / 8) * 8;
  }
  for (; j < w; ++j) r += static_cast<size_t>(std::popcount(words_[j]));
  if (i & 63) r += static_cast<size_t>(std::popcount(words_[w] & ((uint64_t{1} << (i & 63)) - 1)));
  return r;
}

size_t BitVector::rank(bool c, size_t i) const {
  if (i > n_) throw std::out_of_range("BitVector::rank: position out of range");
  size_t r1 = rank1(i);
  return c ? r1 : i - r1;
}

size_t BitVector::select_impl(bool c, size_t k) const {
  size_t n_words = (n_ + 63) / 64;
  if (super_.empty()) {
    size_t r = 0;
    for (size_t w = 0; w < n_words; ++w) {
      uint64_t ww = c ? words_[w] : ~words_[w];
      size_t pc = static_cast<size_t>(std::popcount(ww));
      if (r + pc >= k) return w * 64 + select_in_word(ww, static_cast<uint32_t>(k - r));
      r += pc;
    }
    throw std::out_of_range("BitVector::select: internal");
  }
  const auto& samples = c ? select1_samples_ : select0_samples_;
  size_t lo_word = 0, hi_word = n_words;
  if (!samples.empty()) {
    size_t idx = (k - 1) / kSelectStride;
    lo_word = samples[idx] >> 6;
    if (idx + 1 < samples.size()) hi_word = samples[idx + 1] >> 6;
  }
  size_t lo_sb = lo_word / 32, hi_sb = hi_word / 32 + 1;
  size_t last_sb = super_.size() - 1;
  if (hi_sb > last_sb) hi_sb = last_sb;
  auto rank_c_at_sb = [&](size_t sb) {
    size_t bits = sb * kSuperBits;
    return c ? super_[sb] : bits - super_[sb];
  };
  while (lo_sb + 1 < hi_sb) {
    size_t mid = (lo_sb + hi_sb) / 2;
    if (rank_c_at_sb(mid) >= k) hi_sb = mid; else lo_sb = mid;
  }
  size_t blk = lo_sb * 4;  // 4 blocks of 8 words per superblock
  for (size_t b = blk; b < blk + 4; ++b) {
    size_t wstart = b * 8;
    if (wstart >= n_words) break;
    size_t next_start = (b + 1) * 8;
    size_t r_next;
    if (next_start >= (lo_sb + 1) * 32 || next_start >= n_words) {
      r_next = SIZE_MAX;  // force entry
    } else {
      size_t ones = super_[lo_sb] + block_[b + 1];
      r_next = c ? ones : next_start * 64 - ones;
    }
    size_t ones_here = super_[lo_sb] + block_[b];
    size_t r_here = c ? ones_here : wstart * 64 - ones_here;
    if (r_next >= k) {
      size_t r = r_here;
      for (size_t w2 = wstart; w2 < wstart + 8 && w2 < n_words; ++w2) {
        uint64_t ww = c ? words_[w2] : ~words_[w2];
        size_t pc = static_cast<size_t>(std::popcount(ww));
        if (r + pc >= k) {
          uint32_t pos = select_in_word(ww, static_cast<uint32_t>(k - r));
          return w2 * 64 + pos;
        }
        r += pc;
      }
    }
  }
  throw std::out_of_range("BitVector::select: internal");
}

size_t BitVector::select(bool c, size_t k) const {
  size_t total = c ? ones_ : n_ - ones_;
  if (k == 0 || k > total) throw std::out_of_range("BitVector::select: ordinal out of range");
  return select_impl(c, k) + 1;
}

std::optional<size_t> BitVector::find_one_in_range(size_t s, size_t e) const {
  if (s == e + 1) return std::nullopt;
  if (s < 1 || s > e || e > n_) throw std::out_of_range("BitVector::find_one_in_range");
  auto r = find_one_in_words(words_.data(), s - 1, e - 1);
  if (!r) return std::nullopt;
  return *r + 1;
}

size_t BitVector::size_in_bits() const {
  return words_.size() * 64 + index_overhead_bits();
}

size_t BitVector::index_overhead_bits() const {
  return super_.size() * 64 + block_.size() * 16 +
         (select1_samples_.size() + select0_samples_.size()) * 64;
}

}  // namespace lzc
