#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lzc/factor.hpp"

namespace lzc {

// Factor file formats. Text: one record per line, `L <byte>` for literals,
// `R <src> <len>` for references, 1-based decimal. Binary: magic "LZC1",
// then per record a tag byte (0 literal, 1 reference) followed by one
// payload byte or two LEB128 varints.
enum class FactorFormat { text, binary };

struct FactorIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<uint8_t> encode_factors(const FactorList& factors, FactorFormat fmt);
FactorList decode_factors(const std::vector<uint8_t>& data, FactorFormat fmt);

// Recognizes the binary magic; falls back to text.
FactorFormat sniff_format(const std::vector<uint8_t>& data);

}  // namespace lzc
