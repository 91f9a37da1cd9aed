#include "lzc/oracle.hpp"

#include <algorithm>

namespace lzc {
namespace oracle {

std::pair<uint64_t, uint64_t> lpf_at(std::span<const uint8_t> text, size_t i) {
  size_t n = text.size();
  uint64_t best_len = 0, best_src = 0;
  for (size_t p = 0; p < i; ++p) {
    size_t l = 0;
    while (i + l < n && text[p + l] == text[i + l]) ++l;
    if (l > best_len) { best_len = l; best_src = p + 1; }
  }
  return {best_src, best_len};
}

FactorList lz(std::span<const uint8_t> text) {
  FactorList out;
  size_t i = 0;
  while (i < text.size()) {
    auto [src, len] = lpf_at(text, i);
    if (len == 0) {
      out.push_back(Factor::make_literal(text[i]));
      i += 1;
    } else {
      out.push_back(Factor::make_ref(src, len));
      i += len;
    }
  }
  return out;
}

FactorList rightmost(std::span<const uint8_t> text) {
  FactorList out = lz(text);
  size_t i = 0;
  for (Factor& f : out) {
    if (!f.is_literal) {
      uint64_t len = f.len;
      for (size_t p = i; p-- > 0;) {
        if (std::equal(text.begin() + p, text.begin() + p + len, text.begin() + i)) {
          f.src = p + 1;
          break;
        }
      }
    }
    i += f.span();
  }
  return out;
}

std::optional<std::pair<uint32_t, uint32_t>>
range_pred(std::span<const uint32_t> y_of_x, size_t x1, size_t x2, size_t y2) {
  std::optional<std::pair<uint32_t, uint32_t>> best;
  for (size_t x = x1; x <= x2 && x <= y_of_x.size(); ++x) {
    uint32_t y = y_of_x[x - 1];
    if (y <= y2 && (!best || y > best->second))
      best = std::make_pair(static_cast<uint32_t>(x), y);
  }
  return best;
}

}  // namespace oracle
}  // namespace lzc
