#pragma once

#include <cstdint>
#include <vector>

namespace lzc {

// One LZ77 phrase: a fresh literal byte or a (source, length) reference to
// an earlier occurrence. Positions are 1-based; a literal occupies one text
// position and is encoded as (byte, 0) in the pair convention.
struct Factor {
  bool is_literal = false;
  uint8_t literal = 0;
  uint64_t src = 0;
  uint64_t len = 0;

  uint64_t span() const { return is_literal ? 1 : len; }

  static Factor make_literal(uint8_t b) { return Factor{true, b, 0, 0}; }
  static Factor make_ref(uint64_t src, uint64_t len) { return Factor{false, 0, src, len}; }

  bool operator==(const Factor&) const = default;
};

using FactorList = std::vector<Factor>;

}  // namespace lzc
