#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

// Word-level primitives shared by the succinct structures: process-wide
// 8/16-bit lookup tables (built once at startup), a fixed-width packed
// integer array and a growable bit buffer.
namespace lzc {

inline uint32_t bit_width_u64(uint64_t v) { return static_cast<uint32_t>(std::bit_width(v)); }

// Smallest power of two >= v (v >= 1).
inline uint64_t ceil_pow2(uint64_t v) { return std::bit_ceil(v); }

inline uint32_t log2_pow2(uint64_t v) { return static_cast<uint32_t>(std::countr_zero(v)); }

// Position (0-7) of the k-th (1-based) set bit of a byte, 8 if absent.
const uint8_t* select_in_byte_table();

inline uint32_t select_in_word(uint64_t w, uint32_t k) {
  const uint8_t* tab = select_in_byte_table();
  for (uint32_t byte = 0; byte < 8; ++byte) {
    uint32_t c = static_cast<uint32_t>(std::popcount(static_cast<uint8_t>(w >> (byte * 8))));
    if (k <= c) return byte * 8 + tab[(static_cast<size_t>(w >> (byte * 8)) & 0xffu) * 8 + (k - 1)];
    k -= c;
  }
  return 64;
}

// Stable 0s-then-1s partition order of 8 positions keyed by a plane byte:
// low 32 bits hold eight 4-bit position slots, bits 32..35 hold the count
// of zero entries.
const uint64_t* partition8_table();

// Leftmost position with a set bit in words[s..e] (0-based bit indices,
// inclusive), table-driven: whole-word masking plus per-byte lookups.
std::optional<size_t> find_one_in_words(const uint64_t* words, size_t s, size_t e);

// Fixed-width packed integer array, width <= 64.
class PackedIntVector {
 public:
  PackedIntVector() = default;
  PackedIntVector(size_t n, uint32_t width);

  void set(size_t i, uint64_t v);
  uint64_t get(size_t i) const {
    size_t bit = i * width_;
    size_t w = bit >> 6, off = bit & 63;
    uint64_t lo = words_[w] >> off;
    if (off + width_ > 64) lo |= words_[w + 1] << (64 - off);
    return lo & mask_;
  }
  void push_back(uint64_t v);

  // Little-endian bit window starting at element i; caller masks.
  uint64_t read_window(size_t i) const {
    size_t bit = i * width_;
    size_t w = bit >> 6, off = bit & 63;
    uint64_t lo = words_[w] >> off;
    if (off != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - off);
    return lo;
  }

  size_t size() const { return size_; }
  uint32_t width() const { return width_; }
  uint64_t mask() const { return mask_; }
  size_t size_in_bits() const { return words_.size() * 64 + 128; }
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  void ensure_capacity(size_t n);
  std::vector<uint64_t> words_;
  size_t size_ = 0;
  uint32_t width_ = 0;
  uint64_t mask_ = 0;
};

// Append-only bit sequence; backing store for BitVector construction and
// for the parser's visited bits.
class BitBuffer {
 public:
  BitBuffer() = default;
  explicit BitBuffer(size_t n_bits) : words_((n_bits + 63) / 64, 0), size_(n_bits) {}

  void append_bit(bool b) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (b) words_[size_ >> 6] |= uint64_t{1} << (size_ & 63);
    ++size_;
  }
  // Appends the low `len` bits of v, LSB first.
  void append_bits(uint64_t v, uint32_t len);

  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  size_t size() const { return size_; }
  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>&& take_words() && { return std::move(words_); }

 private:
  std::vector<uint64_t> words_;
  size_t size_ = 0;
};

}  // namespace lzc
