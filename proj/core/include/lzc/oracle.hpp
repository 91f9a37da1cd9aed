#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lzc/factor.hpp"

namespace lzc {
// Brute-force reference implementations backing the property tests and the
// CLI verify command. Quadratic scans throughout; correctness over speed.
namespace oracle {

// Longest previous factor at each position: (src, len), len 0 for a fresh
// symbol. src is the leftmost maximal match.
std::pair<uint64_t, uint64_t> lpf_at(std::span<const uint8_t> text, size_t i);

// Greedy left-to-right parsing into longest previous factors.
FactorList lz(std::span<const uint8_t> text);

// Same boundaries with each source replaced by its rightmost admissible
// position.
FactorList rightmost(std::span<const uint8_t> text);

// Linear scan range predecessor over a rank-space point set.
std::optional<std::pair<uint32_t, uint32_t>>
range_pred(std::span<const uint32_t> y_of_x, size_t x1, size_t x2, size_t y2);

}  // namespace oracle
}  // namespace lzc
