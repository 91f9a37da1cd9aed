#include "lzc/bits.hpp"

#include <array>
#include <stdexcept>

namespace lzc {

namespace {

struct SelectInByte {
  std::array<uint8_t, 256 * 8> t{};
  SelectInByte() {
    for (uint32_t b = 0; b < 256; ++b) {
      uint32_t k = 0;
      for (uint32_t bit = 0; bit < 8; ++bit) t[b * 8 + bit] = 8;
      for (uint32_t bit = 0; bit < 8; ++bit)
        if (b & (1u << bit)) t[b * 8 + k++] = static_cast<uint8_t>(bit);
    }
  }
};

struct Partition8 {
  std::array<uint64_t, 256> t{};
  Partition8() {
    for (uint32_t m = 0; m < 256; ++m) {
      uint64_t order = 0;
      uint32_t slot = 0;
      for (uint32_t bit = 0; bit < 8; ++bit)
        if (!(m & (1u << bit))) order |= static_cast<uint64_t>(bit) << (4 * slot++);
      uint64_t zeros = slot;
      for (uint32_t bit = 0; bit < 8; ++bit)
        if (m & (1u << bit)) order |= static_cast<uint64_t>(bit) << (4 * slot++);
      t[m] = order | (zeros << 32);
    }
  }
};

}  // namespace

const uint8_t* select_in_byte_table() {
  static const SelectInByte tab;
  return tab.t.data();
}

const uint64_t* partition8_table() {
  static const Partition8 tab;
  return tab.t.data();
}

std::optional<size_t> find_one_in_words(const uint64_t* words, size_t s, size_t e) {
  if (s > e) return std::nullopt;
  const uint8_t* tab = select_in_byte_table();
  size_t w0 = s >> 6, w1 = e >> 6;
  for (size_t w = w0; w <= w1; ++w) {
    uint64_t word = words[w];
    if (w == w0) word &= ~uint64_t{0} << (s & 63);
    if (w == w1 && (e & 63) != 63) word &= (uint64_t{1} << ((e & 63) + 1)) - 1;
    if (word == 0) continue;
    for (uint32_t byte = 0; byte < 8; ++byte) {
      uint8_t b = static_cast<uint8_t>(word >> (byte * 8));
      if (b != 0) return w * 64 + byte * 8 + tab[static_cast<size_t>(b) * 8];
    }
  }
  return std::nullopt;
}

PackedIntVector::PackedIntVector(size_t n, uint32_t width) {
  width_ = width;
  mask_ = width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
  size_ = n;
  words_.assign((n * width + 63) / 64 + 1, 0);
}

void PackedIntVector::ensure_capacity(size_t n) {
  size_t need = (n * width_ + 63) / 64 + 1;
  if (words_.size() < need) words_.resize(need, 0);
}

void PackedIntVector::set(size_t i, uint64_t v) {
  v &= mask_;
  size_t bit = i * width_;
  size_t w = bit >> 6, off = bit & 63;
  words_[w] = (words_[w] & ~(mask_ << off)) | (v << off);
  if (off + width_ > 64) {
    uint32_t hi = static_cast<uint32_t>(off + width_ - 64);
    words_[w + 1] = (words_[w + 1] & ~((uint64_t{1} << hi) - 1)) | (v >> (64 - off));
  }
}

void PackedIntVector::push_back(uint64_t v) {
  ensure_capacity(size_ + 1);
  ++size_;
  set(size_ - 1, v);
}

void BitBuffer::append_bits(uint64_t v, uint32_t len) {
  if (len == 0) return;
  if (len < 64) v &= (uint64_t{1} << len) - 1;
  size_t off = size_ & 63;
  if (off == 0) {
    words_.push_back(v);
  } else {
    words_.back() |= v << off;
    if (off + len > 64) words_.push_back(v >> (64 - off));
  }
  size_ += len;
}

}  // namespace lzc
