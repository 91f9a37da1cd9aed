#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lzc/oracle.hpp"
#include "lzc/rightmost.hpp"
#include "test_util.hpp"

using lzc::RightmostConfig;
using lzc::RightmostMode;
using lzc::rightmost_parse;

namespace {

void check_equal(const lzc::FactorList& got, const lzc::FactorList& want) {
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i) {
    REQUIRE(got[i].is_literal == want[i].is_literal);
    if (got[i].is_literal) {
      REQUIRE(got[i].literal == want[i].literal);
    } else {
      REQUIRE(got[i].len == want[i].len);
      REQUIRE(got[i].src == want[i].src);
    }
  }
}

void check_both_modes(const std::vector<uint8_t>& text, RightmostConfig cfg = {}) {
  auto want = lzc::oracle::rightmost(text);
  cfg.mode = RightmostMode::basic;
  check_equal(rightmost_parse(text, cfg).factors, want);
  cfg.mode = RightmostMode::stratified;
  check_equal(rightmost_parse(text, cfg).factors, want);
}

}  // anonymous

TEST_CASE("worked example sources") {
  auto text = lzc_test::bytes_of("araarraaa");
  for (auto mode : {RightmostMode::basic, RightmostMode::stratified}) {
    RightmostConfig cfg;
    cfg.mode = mode;
    auto fs = rightmost_parse(text, cfg).factors;
    REQUIRE(fs.size() == 6);
    CHECK(fs[2].src == 1);
    CHECK(fs[3].src == 1);
    CHECK(fs[4].src == 2);
    CHECK(fs[5].src == 8);
  }
}

TEST_CASE("basic solver on tiny inputs") {
  {
    auto fs = rightmost_parse(lzc_test::bytes_of("abab")).factors;
    REQUIRE(fs.size() == 3);
    CHECK(fs[2].src == 1);
    CHECK(fs[2].len == 2);
  }
  {
    auto fs = rightmost_parse(lzc_test::bytes_of("aa")).factors;
    REQUIRE(fs.size() == 2);
    CHECK(fs[1].src == 1);
  }
  {
    auto fs = rightmost_parse(lzc_test::bytes_of("xyz")).factors;
    for (const auto& f : fs) CHECK(f.is_literal);
  }
  CHECK(rightmost_parse({}).factors.empty());
}

TEST_CASE("config validation") {
  auto text = lzc_test::bytes_of("abracadabra");
  RightmostConfig bad;
  bad.r = 9;
  bad.ell = 4;
  CHECK_THROWS_AS(rightmost_parse(text, bad), std::invalid_argument);
  RightmostConfig bad2;
  bad2.block = 1;
  CHECK_THROWS_AS(rightmost_parse(text, bad2), std::invalid_argument);
}

TEST_CASE("query tree is laminar and resolves nested intervals") {
  std::mt19937_64 rng(0x5eed0070);
  auto text = lzc_test::random_letters(rng, 400, 2);
  lzc::TextIndex ti(lzc::make_text(text));
  auto base = lzc::lz_parse(text).factors;
  std::vector<lzc::PhraseQuery> queries;
  uint64_t pos = 1;
  for (size_t f = 0; f < base.size(); ++f) {
    if (!base[f].is_literal) {
      std::pair<size_t, size_t> cur{1, ti.n()};
      for (uint64_t k = 0; k < base[f].len; ++k) {
        uint32_t c = ti.text().sym[pos + base[f].len - k - 2];
        cur = ti.backward_search_step(cur, c).value();
      }
      queries.push_back({pos, base[f].len, cur.first, cur.second, (uint32_t)f});
    }
    pos += base[f].span();
  }
  REQUIRE(!queries.empty());
  lzc::QueryTree qt(ti.n(), queries);
  CHECK(qt.laminar_ok());
  auto srcs = qt.resolve(ti);
  auto want = lzc::oracle::rightmost(text);
  for (size_t q = 0; q < queries.size(); ++q)
    REQUIRE(srcs[q] == want[queries[q].factor].src);
}

TEST_CASE("long factor solver") {
  // periodic text: the long phrase's rightmost source is the prior period
  std::string p;
  for (int i = 0; i < 32; ++i) p += "ab";
  auto text = lzc_test::bytes_of(p);  // n = 64
  RightmostConfig cfg;
  cfg.ell = 8;
  cfg.r = 4;
  cfg.block = 16;
  check_both_modes(text, cfg);
  auto res = rightmost_parse(text, cfg);
  CHECK(res.stats.long_factors >= 1);

  // block-aligned-only source
  auto t2 = lzc_test::bytes_of("abcdefghXXabcdefgh");
  RightmostConfig cfg2;
  cfg2.ell = 8;
  cfg2.r = 4;
  cfg2.block = 16;
  check_both_modes(t2, cfg2);

  lzc::TextIndex fwd(lzc::make_text(text));
  lzc::LongFactorIndex lfi(fwd, 4, 8);
  CHECK_THROWS_AS(lfi.query(fwd, 3, 4), std::invalid_argument);
}

TEST_CASE("in-block contract violation surfaces as empty") {
  auto text = lzc_test::bytes_of("abcabc");
  lzc::TextIndex ti(lzc::make_text(text));
  lzc::BlockPredIndex bpi(ti, ti.n() + 1);
  // suffix of "a..." occurs at SA interval of 'a'; nothing before position 1
  auto iv = ti.backward_search_step({1, ti.n()}, ti.text().sym[0]).value();
  CHECK(!bpi.query(iv.first, iv.second, 0).has_value());
  CHECK(bpi.query(iv.first, iv.second, 3).has_value());
}

TEST_CASE("category partition is exhaustive and each path fires") {
  std::mt19937_64 rng(0x5eed0071);
  auto text = lzc_test::repetitive_text(rng, 3000, 3, 64, 0.02);
  RightmostConfig cfg;
  cfg.ell = 16;
  cfg.r = 4;
  cfg.block = 64;
  auto res = rightmost_parse(text, cfg);
  size_t refs = 0;
  for (const auto& f : res.factors) refs += !f.is_literal;
  CHECK(res.stats.long_factors + res.stats.boundary_factors + res.stats.inblock_factors == refs);
  CHECK(res.stats.long_factors >= 1);
  CHECK(res.stats.boundary_factors >= 1);
  CHECK(res.stats.inblock_factors >= 1);
  check_both_modes(text, cfg);
}

TEST_CASE("wide byte alphabets through the long-factor path") {
  std::mt19937_64 rng(0x5eed0073);
  std::vector<uint8_t> blob(180);
  for (size_t i = 0; i < blob.size(); ++i) blob[i] = static_cast<uint8_t>(i + 30);
  std::vector<uint8_t> text;
  while (text.size() < 1200) {
    text.insert(text.end(), blob.begin(), blob.end());
    text.push_back(static_cast<uint8_t>(rng() % 251));
  }
  RightmostConfig cfg;
  cfg.ell = 12;
  cfg.r = 4;
  cfg.block = 48;
  auto res = rightmost_parse(text, cfg);
  CHECK(res.stats.long_factors >= 1);
  check_both_modes(text, cfg);
}

TEST_CASE("exhaustive short strings in both modes") {
  for (uint32_t sigma : {2u, 3u}) {
    size_t max_len = sigma == 2 ? 10 : 6;
    for (size_t len = 1; len <= max_len; ++len) {
      std::vector<uint8_t> s(len, 'a');
      do {
        check_both_modes(s);
      } while (lzc_test::next_string(s, sigma));
    }
  }
}

TEST_CASE("random strings, boundaries dominate the plain parse") {
  std::mt19937_64 rng(0x5eed0072);
  const uint32_t sigmas[] = {2, 4, 26};
  for (int rep = 0; rep < 120; ++rep) {
    double e = std::uniform_real_distribution<double>(1.0, 3.5)(rng);
    size_t n = static_cast<size_t>(std::pow(10.0, e));
    auto text = lzc_test::random_letters(rng, n, sigmas[rep % 3]);
    auto want = lzc::oracle::rightmost(text);
    auto plain = lzc::lz_parse(text).factors;
    RightmostConfig cfg;
    if (rep % 2) {  // force small thresholds so all categories get exercise
      cfg.ell = 8;
      cfg.r = 3;
      cfg.block = 32;
    }
    cfg.mode = rep % 4 < 2 ? RightmostMode::stratified : RightmostMode::basic;
    auto got = rightmost_parse(text, cfg).factors;
    check_equal(got, want);
    REQUIRE(got.size() == plain.size());
    for (size_t i = 0; i < got.size(); ++i)
      if (!got[i].is_literal) {
        REQUIRE(got[i].len == plain[i].len);
        REQUIRE(got[i].src >= plain[i].src);
      }
  }
}
