#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lzc/wavelet_tree.hpp"

namespace lzc {

// A text over a dense alphabet [0, sigma) whose last symbol is the unique
// minimal sentinel 0.
struct Text {
  std::vector<uint32_t> sym;
  uint32_t sigma = 1;
  size_t n() const { return sym.size(); }
};

// Remaps raw bytes to dense codes (assigned in first-occurrence order,
// sentinel = 0) and appends the sentinel.
Text make_text(std::span<const uint8_t> bytes);
Text make_reversed_text(std::span<const uint8_t> bytes);

// Suffix array by induced sorting; input must end with the unique minimal
// sentinel. Returns 0-based suffix start positions.
std::vector<int32_t> suffix_array_induced(std::span<const uint32_t> s, uint32_t sigma);

// Suffix array, BWT (as a wavelet tree), symbol counts, LF/FL steps,
// backward search and a sampled-SA lookup. Public positions are 1-based.
class TextIndex {
 public:
  TextIndex() = default;
  explicit TextIndex(Text text);

  size_t n() const { return text_.n(); }
  uint32_t sigma() const { return text_.sigma; }
  const Text& text() const { return text_; }

  size_t sa_at(size_t j) const { return static_cast<size_t>(sa_[j - 1]) + 1; }
  size_t isa_first() const { return isa_first_; }
  uint32_t bwt_at(size_t i) const;
  uint64_t count_below(uint32_t c) const { return count_[c]; }

  // SA interval of cY given the interval of Y; empty result is nullopt.
  std::optional<std::pair<size_t, size_t>>
  backward_search_step(std::pair<size_t, size_t> range, uint32_t c) const;

  // SA position of the suffix one text position earlier (wraps at 1).
  size_t lf(size_t i) const;
  // Inverse of lf: SA position of the suffix one text position later.
  size_t fl(size_t j) const;

  // Visits (sa_pos, text_pos) n times: first suffix 1, then n, n-1, ..., 2.
  void invert_bwt_visit(const std::function<void(size_t, size_t)>& visitor) const;

  // Stepwise access to the same traversal.
  class InversionCursor {
   public:
    explicit InversionCursor(const TextIndex& ti)
        : ti_(&ti), cur_(ti.isa_first()), next_pos_(1), emitted_(0) {}
    bool done() const { return emitted_ >= ti_->n(); }
    std::pair<size_t, size_t> next();

   private:
    const TextIndex* ti_;
    size_t cur_, next_pos_, emitted_;
  };
  InversionCursor cursor() const { return InversionCursor(*this); }

  // sa_at(j) recovered through the sampled SA (<= stride LF steps).
  size_t sa_lookup(size_t j) const;
  uint32_t sample_stride() const { return sample_stride_; }

  size_t bwt_size_in_bits() const { return bwt_.size_in_bits(); }
  const WaveletTree& bwt() const { return bwt_; }

 private:
  // The single sentinel occurrence of L sits at isa_first_ and is kept out
  // of the wavelet tree, which then spans only the real alphabet.
  size_t bwt_rank(uint32_t c, size_t i) const;  // occurrences of c in L[1..i]

  Text text_;
  std::vector<int32_t> sa_;
  WaveletTree bwt_;  // L without the sentinel, codes shifted down by one
  std::vector<uint64_t> count_;  // C[c] = symbols lexicographically below c
  uint32_t sample_stride_ = 1;
  BitVector sample_marks_;
  std::vector<uint32_t> sample_vals_;
  size_t isa_first_ = 1;
};

}  // namespace lzc
