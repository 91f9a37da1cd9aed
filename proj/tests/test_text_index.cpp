#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "lzc/text_index.hpp"
#include "test_util.hpp"

using lzc::make_text;
using lzc::Text;
using lzc::TextIndex;

namespace {

std::vector<int32_t> naive_sa(const std::vector<uint32_t>& s) {
  std::vector<int32_t> sa(s.size());
  for (size_t i = 0; i < s.size(); ++i) sa[i] = static_cast<int32_t>(i);
  std::sort(sa.begin(), sa.end(), [&](int32_t a, int32_t b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  return sa;
}

TextIndex index_of(const std::string& s) {
  return TextIndex(make_text(lzc_test::bytes_of(s)));
}

}  // anonymous

TEST_CASE("suffix array examples") {
  {
    TextIndex ti = index_of("ab");
    REQUIRE(ti.n() == 3);
    CHECK(ti.sa_at(1) == 3);
    CHECK(ti.sa_at(2) == 1);
    CHECK(ti.sa_at(3) == 2);
  }
  {
    TextIndex ti = index_of("");
    REQUIRE(ti.n() == 1);
    CHECK(ti.sa_at(1) == 1);
  }
  {
    TextIndex ti = index_of("aa");
    CHECK(ti.sa_at(1) == 3);
    CHECK(ti.sa_at(2) == 2);
    CHECK(ti.sa_at(3) == 1);
  }
}

TEST_CASE("text validation") {
  Text bad;
  bad.sym = {1, 2};  // no sentinel
  bad.sigma = 3;
  CHECK_THROWS_AS(TextIndex{bad}, std::invalid_argument);
  Text sparse;
  sparse.sym = {2, 0};  // code 1 unused
  sparse.sigma = 3;
  CHECK_THROWS_AS(TextIndex{sparse}, std::invalid_argument);
}

TEST_CASE("backward search examples") {
  TextIndex ti = index_of("abab");
  uint32_t a = ti.text().sym[0], b = ti.text().sym[1];
  auto bi = ti.backward_search_step({1, ti.n()}, b);
  REQUIRE(bi.has_value());
  auto ab = ti.backward_search_step(*bi, a);
  REQUIRE(ab.has_value());
  CHECK(ab->second - ab->first + 1 == 2);
  CHECK(!ti.backward_search_step({1, ti.n()}, 99).has_value());
  auto full = ti.backward_search_step({1, ti.n()}, a);
  REQUIRE(full.has_value());
  CHECK(full->first == ti.count_below(a) + 1);
  CHECK(full->second == ti.count_below(a + 1));
}

TEST_CASE("lf cycle") {
  TextIndex one = index_of("");
  CHECK(one.lf(1) == 1);
  TextIndex ti = index_of("aa");
  size_t cur = ti.isa_first();
  std::vector<size_t> seen;
  for (size_t k = 0; k < ti.n(); ++k) {
    seen.push_back(cur);
    cur = ti.lf(cur);
  }
  CHECK(cur == ti.isa_first());
  std::sort(seen.begin(), seen.end());
  for (size_t k = 0; k < ti.n(); ++k) CHECK(seen[k] == k + 1);
}

TEST_CASE("fl inverts lf") {
  TextIndex ti = index_of("abracadabra");
  for (size_t j = 1; j <= ti.n(); ++j) CHECK(ti.fl(ti.lf(j)) == j);
}

TEST_CASE("inversion visit order") {
  TextIndex ti = index_of("ab");
  std::vector<std::pair<size_t, size_t>> visits;
  ti.invert_bwt_visit([&](size_t s, size_t t) { visits.push_back({s, t}); });
  REQUIRE(visits.size() == 3);
  CHECK(visits[0].second == 1);
  CHECK(visits[1].second == 3);
  CHECK(visits[2].second == 2);
  std::vector<size_t> sa_pos;
  for (auto& [s, t] : visits) {
    CHECK(ti.sa_at(s) == t);
    sa_pos.push_back(s);
  }
  std::sort(sa_pos.begin(), sa_pos.end());
  CHECK(sa_pos == std::vector<size_t>{1, 2, 3});
}

TEST_CASE("single-symbol text visits once") {
  TextIndex ti = index_of("");
  size_t visits = 0;
  ti.invert_bwt_visit([&](size_t s, size_t t) {
    ++visits;
    CHECK(s == 1);
    CHECK(t == 1);
  });
  CHECK(visits == 1);
}

TEST_CASE("sa_lookup examples") {
  TextIndex ti = index_of("abracadabra");
  for (size_t j = 1; j <= ti.n(); ++j) CHECK(ti.sa_lookup(j) == ti.sa_at(j));
  CHECK(ti.sa_lookup(ti.isa_first()) == 1);
}

TEST_CASE("exhaustive small and randomized against naive") {
  auto check_text = [](const std::vector<uint8_t>& bytes, uint32_t pat_sigma, int pat_budget) {
    Text t = make_text(bytes);
    TextIndex ti(t);
    auto sa = naive_sa(t.sym);
    for (size_t j = 1; j <= ti.n(); ++j) {
      REQUIRE(ti.sa_at(j) == static_cast<size_t>(sa[j - 1]) + 1);
      REQUIRE(ti.sa_lookup(j) == ti.sa_at(j));
    }
    // inversion visits text positions 1, n, n-1, ..., 2
    std::vector<size_t> order;
    ti.invert_bwt_visit([&](size_t, size_t tp) { order.push_back(tp); });
    REQUIRE(order[0] == 1);
    for (size_t k = 1; k < order.size(); ++k) REQUIRE(order[k] == ti.n() - k + 1);

    // backward search of every pattern up to length 4 against binary search
    std::vector<uint32_t> pat;
    auto expected_interval = [&](const std::vector<uint32_t>& p)
        -> std::optional<std::pair<size_t, size_t>> {
      auto cmp_lt = [&](int32_t suf, const std::vector<uint32_t>& q) {
        size_t i = 0;
        for (; i < q.size() && suf + i < t.sym.size(); ++i) {
          if (t.sym[suf + i] != q[i]) return t.sym[suf + i] < q[i];
        }
        return i < q.size();  // suffix is a proper prefix of the pattern
      };
      size_t lo = 0, hi = sa.size();
      while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (cmp_lt(sa[mid], p)) lo = mid + 1; else hi = mid;
      }
      size_t start = lo;
      hi = sa.size();
      auto is_prefix = [&](int32_t suf) {
        if (suf + p.size() > t.sym.size()) return false;
        return std::equal(p.begin(), p.end(), t.sym.begin() + suf);
      };
      size_t end = start;
      while (end < sa.size() && is_prefix(sa[end])) ++end;
      if (end == start) return std::nullopt;
      return std::make_pair(start + 1, end);
    };
    std::function<void(int)> rec = [&](int depth) {
      if (!pat.empty()) {
        std::optional<std::pair<size_t, size_t>> got{{1, ti.n()}};
        for (size_t k = pat.size(); k-- > 0 && got;)
          got = ti.backward_search_step(*got, pat[k]);
        REQUIRE(got == expected_interval(pat));
      }
      if (depth == pat_budget) return;
      for (uint32_t c = 1; c <= pat_sigma; ++c) {
        pat.push_back(c);
        rec(depth + 1);
        pat.pop_back();
      }
    };
    rec(0);
  };

  // all strings over {a,b} up to length 10
  for (size_t len = 0; len <= 10; ++len) {
    std::vector<uint8_t> s(len, 'a');
    do {
      check_text(s, 2, 4);
    } while (lzc_test::next_string(s, 2));
    if (len == 0) continue;
  }

  // random strings over growing alphabets
  std::mt19937_64 rng(0x5eed0040);
  const uint32_t sigmas[] = {2, 4, 26};
  for (int rep = 0; rep < 200; ++rep) {
    std::uniform_int_distribution<size_t> lens(1, 4096);
    auto s = lzc_test::random_letters(rng, lens(rng), sigmas[rep % 3]);
    check_text(s, std::min<uint32_t>(sigmas[rep % 3], 4), rep % 5 == 0 ? 4 : 2);
  }
}
