// lzc: LZ77 factorization in compact working space, with an optional
// rightmost-source pass. Subcommands: parse, decode, verify, stats.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "lzc/factor_io.hpp"
#include "lzc/lz_parse.hpp"
#include "lzc/oracle.hpp"
#include "lzc/range_predecessor.hpp"
#include "lzc/rightmost.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitIo = 2;
constexpr int kExitConfig = 3;
constexpr int kExitBadFile = 4;

bool read_file(const std::string& path, std::vector<uint8_t>& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

bool write_file(const std::string& path, const std::vector<uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  return out.good();
}

void print_stat(const char* key, uint64_t value) {
  std::cerr << key << "=" << value << "\n";
}

int cmd_parse(const std::string& input, const std::string& output, const std::string& format,
              bool rightmost, const std::string& mode, uint64_t ell, uint64_t r, uint64_t block) {
  std::vector<uint8_t> text;
  if (!read_file(input, text)) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitIo;
  }
  lzc::FactorList factors;
  if (rightmost) {
    lzc::RightmostConfig cfg;
    cfg.ell = ell;
    cfg.r = r;
    cfg.block = block;
    cfg.mode = mode == "basic" ? lzc::RightmostMode::basic : lzc::RightmostMode::stratified;
    lzc::RightmostResult res;
    try {
      res = lzc::rightmost_parse(text, cfg);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
    factors = std::move(res.factors);
    print_stat("long_factors", res.stats.long_factors);
    print_stat("boundary_factors", res.stats.boundary_factors);
    print_stat("inblock_factors", res.stats.inblock_factors);
  } else {
    lzc::LzParseResult res = lzc::lz_parse(text);
    factors = std::move(res.factors);
    print_stat("aux_bits", res.aux.total_bits());
    if (res.n) print_stat("aux_bits_per_symbol_x100", res.aux.total_bits() * 100 / res.n);
    print_stat("bwt_bits", res.bwt_bits);
  }
  auto fmt = format == "binary" ? lzc::FactorFormat::binary : lzc::FactorFormat::text;
  std::vector<uint8_t> enc = lzc::encode_factors(factors, fmt);
  if (!write_file(output, enc)) {
    std::cerr << "error: cannot write " << output << "\n";
    return kExitIo;
  }
  print_stat("n", text.size());
  print_stat("z", factors.size());
  if (!factors.empty()) print_stat("bits_per_factor_x100", enc.size() * 800 / factors.size());
  return 0;
}

int cmd_decode(const std::string& input, const std::string& output) {
  std::vector<uint8_t> data;
  if (!read_file(input, data)) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitIo;
  }
  std::vector<uint8_t> text;
  try {
    lzc::FactorList factors = lzc::decode_factors(data, lzc::sniff_format(data));
    text = lzc::lz_decode(factors);
  } catch (const std::exception& e) {
    std::cerr << "error: malformed factor file: " << e.what() << "\n";
    return kExitBadFile;
  }
  if (!write_file(output, text)) {
    std::cerr << "error: cannot write " << output << "\n";
    return kExitIo;
  }
  return 0;
}

int cmd_verify(const std::string& input, bool rightmost, bool force, uint64_t cap,
               bool inject_fault) {
  std::vector<uint8_t> text;
  if (!read_file(input, text)) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitIo;
  }
  if (text.size() > cap && !force) {
    std::cerr << "error: input larger than " << cap << " bytes; pass --force to verify anyway\n";
    return kExitConfig;
  }
  lzc::FactorList got, want;
  if (rightmost) {
    got = lzc::rightmost_parse(text).factors;
    want = lzc::oracle::rightmost(text);
  } else {
    got = lzc::lz_parse(text).factors;
    want = lzc::oracle::lz(text);
  }
  if (inject_fault && !got.empty()) {
    // negative control: corrupt the output so the comparison must trip
    if (got.back().is_literal) got.back().literal ^= 1;
    else got.back().len += 1;
  }
  size_t upto = std::min(got.size(), want.size());
  for (size_t i = 0; i < upto; ++i) {
    bool same = got[i].is_literal == want[i].is_literal;
    if (same && got[i].is_literal) same = got[i].literal == want[i].literal;
    if (same && !got[i].is_literal) {
      // boundaries must agree; sources only in rightmost mode
      same = got[i].len == want[i].len && (!rightmost || got[i].src == want[i].src);
    }
    if (!same) {
      std::cerr << "mismatch at factor " << i + 1 << "\n";
      return kExitMismatch;
    }
  }
  if (got.size() != want.size()) {
    std::cerr << "mismatch: factor counts " << got.size() << " vs " << want.size() << "\n";
    return kExitMismatch;
  }
  std::cout << "ok: " << got.size() << " factors\n";
  return 0;
}

int cmd_stats(const std::string& input, uint32_t c) {
  std::vector<uint8_t> text;
  if (!read_file(input, text)) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitIo;
  }
  lzc::LzParseResult res = lzc::lz_parse(text);
  print_stat("n", res.n);
  print_stat("z", res.factors.size());
  print_stat("block_size", res.aux.block_size);
  print_stat("block_maxima_bits", res.aux.block_maxima_bits);
  print_stat("rmax_bits", res.aux.rmax_bits);
  print_stat("visited_bits", res.aux.visited_bits);
  print_stat("candidate_bits", res.aux.candidate_bits);
  print_stat("aux_bits", res.aux.total_bits());
  print_stat("bwt_bits", res.bwt_bits);
  // range-predecessor space report over a same-size permutation
  size_t n = std::min<size_t>(text.size(), size_t{1} << 16);
  if (n >= 2) {
    std::vector<uint32_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<uint32_t>(i + 1);
    std::mt19937 rng(42);
    std::shuffle(perm.begin(), perm.end(), rng);
    lzc::RangePredIndex rp(lzc::PointSet::from_y_of_x(std::move(perm)), c);
    print_stat("rp_n", n);
    print_stat("rp_c", rp.granularity());
    print_stat("rp_nodes", rp.node_count());
    print_stat("rp_bits", rp.size_in_bits());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LZ77 factorization in compact space with rightmost sources"};
  app.require_subcommand(1);

  std::string input, output, format = "text", mode = "stratified";
  bool rightmost = false, force = false, inject_fault = false;
  uint64_t ell = 0, r = 0, block = 0, cap = 100000;
  uint32_t rp_c = 2;

  auto* parse = app.add_subcommand("parse", "factorize a file");
  parse->add_option("input", input)->required();
  parse->add_option("output", output)->required();
  parse->add_option("--format", format)->check(CLI::IsMember({"text", "binary"}));
  parse->add_flag("--rightmost", rightmost, "emit rightmost sources");
  parse->add_option("--mode", mode)->check(CLI::IsMember({"basic", "stratified"}));
  parse->add_option("--ell", ell, "long-factor threshold");
  parse->add_option("--r", r, "text sample stride");
  parse->add_option("--block", block, "SA block size");

  auto* decode = app.add_subcommand("decode", "reconstruct a file from factors");
  decode->add_option("input", input)->required();
  decode->add_option("output", output)->required();

  auto* verify = app.add_subcommand("verify", "compare against the brute-force oracle");
  verify->add_option("input", input)->required();
  verify->add_flag("--rightmost", rightmost);
  verify->add_flag("--force", force, "verify inputs larger than the cap");
  verify->add_option("--cap", cap, "oracle size cap in bytes");
  verify->add_flag("--inject-fault", inject_fault)->group("");  // negative-control hook

  auto* stats = app.add_subcommand("stats", "space reports for the structures");
  stats->add_option("input", input)->required();
  stats->add_option("--c", rp_c, "range-predecessor granularity");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed())
      return cmd_parse(input, output, format, rightmost, mode, ell, r, block);
    if (decode->parsed()) return cmd_decode(input, output);
    if (verify->parsed()) return cmd_verify(input, rightmost, force, cap, inject_fault);
    if (stats->parsed()) return cmd_stats(input, rp_c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
