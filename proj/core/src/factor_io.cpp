#include "lzc/factor_io.hpp"

#include <charconv>
#include <cstring>

namespace lzc {

namespace {

constexpr char kMagic[4] = {'L', 'Z', 'C', '1'};

void put_varint(std::vector<uint8_t>& out, uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<uint8_t>(v) | 0x80);
    v >>= 7;
  }
  out.push_back(static_cast<uint8_t>(v));
}

uint64_t get_varint(const std::vector<uint8_t>& in, size_t& pos) {
  uint64_t v = 0;
  uint32_t shift = 0;
  while (true) {
    if (pos >= in.size()) throw FactorIoError("truncated varint");
    uint8_t b = in[pos++];
    if (shift >= 63 && (b & 0x7f) > 1) throw FactorIoError("varint overflow");
    v |= static_cast<uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
    if (shift > 63) throw FactorIoError("varint overflow");
  }
}

}  // namespace

std::vector<uint8_t> encode_factors(const FactorList& factors, FactorFormat fmt) {
  std::vector<uint8_t> out;
  if (fmt == FactorFormat::binary) {
    out.insert(out.end(), kMagic, kMagic + 4);
    for (const Factor& f : factors) {
      if (f.is_literal) {
        out.push_back(0);
        out.push_back(f.literal);
      } else {
        out.push_back(1);
        put_varint(out, f.src);
        put_varint(out, f.len);
      }
    }
    return out;
  }
  std::string line;
  for (const Factor& f : factors) {
    if (f.is_literal) line = "L " + std::to_string(unsigned(f.literal)) + "\n";
    else line = "R " + std::to_string(f.src) + " " + std::to_string(f.len) + "\n";
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

FactorFormat sniff_format(const std::vector<uint8_t>& data) {
  if (data.size() >= 4 && std::memcmp(data.data(), kMagic, 4) == 0) return FactorFormat::binary;
  return FactorFormat::text;
}

FactorList decode_factors(const std::vector<uint8_t>& data, FactorFormat fmt) {
  FactorList out;
  if (fmt == FactorFormat::binary) {
    if (data.size() < 4 || std::memcmp(data.data(), kMagic, 4) != 0)
      throw FactorIoError("bad magic");
    size_t pos = 4;
    while (pos < data.size()) {
      uint8_t tag = data[pos++];
      if (tag == 0) {
        if (pos >= data.size()) throw FactorIoError("truncated literal");
        out.push_back(Factor::make_literal(data[pos++]));
      } else if (tag == 1) {
        uint64_t src = get_varint(data, pos);
        uint64_t len = get_varint(data, pos);
        if (src < 1 || len < 1) throw FactorIoError("bad reference");
        out.push_back(Factor::make_ref(src, len));
      } else {
        throw FactorIoError("bad record tag");
      }
    }
    return out;
  }
  size_t pos = 0;
  size_t lineno = 0;
  while (pos < data.size()) {
    size_t eol = pos;
    while (eol < data.size() && data[eol] != '\n') ++eol;
    ++lineno;
    std::string_view line(reinterpret_cast<const char*>(data.data()) + pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    auto parse_num = [&](std::string_view s, uint64_t& v) {
      auto r = std::from_chars(s.data(), s.data() + s.size(), v);
      if (r.ec != std::errc() || r.ptr != s.data() + s.size())
        throw FactorIoError("bad number at line " + std::to_string(lineno));
    };
    if (line[0] == 'L' && line.size() > 2 && line[1] == ' ') {
      uint64_t b;
      parse_num(line.substr(2), b);
      if (b > 255) throw FactorIoError("literal byte out of range at line " + std::to_string(lineno));
      out.push_back(Factor::make_literal(static_cast<uint8_t>(b)));
    } else if (line[0] == 'R' && line.size() > 2 && line[1] == ' ') {
      size_t sp = line.find(' ', 2);
      if (sp == std::string_view::npos) throw FactorIoError("bad record at line " + std::to_string(lineno));
      uint64_t src, len;
      parse_num(line.substr(2, sp - 2), src);
      parse_num(line.substr(sp + 1), len);
      if (src < 1 || len < 1) throw FactorIoError("bad reference at line " + std::to_string(lineno));
      out.push_back(Factor::make_ref(src, len));
    } else {
      throw FactorIoError("bad record at line " + std::to_string(lineno));
    }
  }
  return out;
}

}  // namespace lzc
