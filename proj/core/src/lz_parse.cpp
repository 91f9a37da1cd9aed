#include "lzc/lz_parse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lzc {

BlockMaxima::BlockMaxima(const TextIndex& ti) {
  size_t n = ti.n();
  uint32_t lg = bit_width_u64(n > 1 ? n - 1 : 1);
  b_ = std::clamp<uint32_t>(lg / 2, 1, 64);
  size_t nb = (n + b_ - 1) / b_;
  maxima_ = std::make_unique<PackedIntVector>(nb, bit_width_u64(n));
  ti.invert_bwt_visit([&](size_t sa_pos, size_t text_pos) {
    size_t k = (sa_pos - 1) / b_;
    if (text_pos > maxima_->get(k)) maxima_->set(k, text_pos);
  });
  rmax_ = RmqIndex(ValueView::of_packed(*maxima_, true));
}

namespace {

struct Candidate {
  uint32_t sa_pos;
  uint32_t factor;
};

}  // namespace

LzParseResult lz_parse(std::span<const uint8_t> text, const LzParseOptions& opts) {
  LzParseResult res;
  res.n = text.size();
  size_t m = text.size();
  if (m == 0) return res;

  Text rev = make_reversed_text(text);
  size_t M = rev.n();
  TextIndex ti(std::move(rev));
  const Text& rt = ti.text();
  res.bwt_bits = ti.bwt_size_in_bits();

  BlockMaxima bm(ti);
  uint32_t b = bm.block_size();

  BitBuffer visited(M);
  size_t marked_ends = 0;
  auto cur = ti.cursor();
  cur.next();  // the full-prefix suffix; its end position is m, never prior
  auto advance_end = [&]() {
    auto v = cur.next();
    if (v.second == M) v = cur.next();  // sentinel suffix, once
    visited.set(v.first - 1);
    ++marked_ends;
  };
  auto find_visited = [&](size_t s, size_t e) -> std::optional<size_t> {
    if (s > e) return std::nullopt;
    auto r = find_one_in_words(visited.words().data(), s - 1, e - 1);
    if (!r) return std::nullopt;
    return *r + 1;
  };

  // True iff SA(reversed)[s..e] holds a suffix visited before the frontier;
  // returns that SA position as the factor's source candidate.
  auto gate = [&](size_t s, size_t e, uint64_t q_min) -> std::optional<size_t> {
    size_t first_full = ((s - 1) % b == 0) ? (s - 1) / b + 1 : (s - 1) / b + 2;
    size_t last_full = e / b;
    if (first_full > last_full) return find_visited(s, e);
    if (auto h = find_visited(s, (first_full - 1) * b)) return h;
    if (auto t = find_visited(last_full * b + 1, e)) return t;
    size_t kb = bm.rmax_block(first_full, last_full);
    if (bm.max_at(kb) >= q_min) {
      auto c = find_visited((kb - 1) * b + 1, kb * b);
      assert(c.has_value());
      return c;
    }
    return std::nullopt;
  };

  FactorList& factors = res.factors;
  std::vector<Candidate> cands;
  size_t i = 1;
  while (i <= m) {
    size_t s = 1, e = M;
    uint64_t matched = 0;
    uint64_t cand_sa = 0;
    while (i + matched <= m) {
      uint32_t c = rt.sym[m - (i + matched)];
      // the current occurrence itself always matches, so the step cannot fail
      auto nr = ti.backward_search_step({s, e}, c).value();
      uint64_t len = matched + 1;
      size_t prospective_end = i + len - 1;
      while (marked_ends + 1 < prospective_end) advance_end();
      uint64_t q_min = m - prospective_end + 2;
      auto hit = gate(nr.first, nr.second, q_min);
      if (opts.gate_trace) opts.gate_trace->push_back({i, len, hit.has_value()});
      if (!hit) break;
      matched = len;
      cand_sa = *hit;
      s = nr.first;
      e = nr.second;
    }
    if (matched == 0) {
      factors.push_back(Factor::make_literal(text[i - 1]));
      i += 1;
    } else {
      cands.push_back({static_cast<uint32_t>(cand_sa), static_cast<uint32_t>(factors.size())});
      factors.push_back(Factor::make_ref(0, matched));
      i += matched;
    }
  }

  // resolve sources with one further inversion over the candidates
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b2) { return a.sa_pos < b2.sa_pos; });
  if (!cands.empty()) {
    ti.invert_bwt_visit([&](size_t sa_pos, size_t text_pos) {
      auto lo = std::lower_bound(cands.begin(), cands.end(), sa_pos,
                                 [](const Candidate& c, size_t v) { return c.sa_pos < v; });
      for (auto it = lo; it != cands.end() && it->sa_pos == sa_pos; ++it) {
        Factor& f = factors[it->factor];
        uint64_t end = m - text_pos + 1;
        f.src = end - f.len + 1;
      }
    });
  }

  res.aux.block_size = b;
  res.aux.block_maxima_bits = bm.maxima_bits();
  res.aux.rmax_bits = bm.rmax_bits();
  res.aux.visited_bits = visited.words().size() * 64;
  res.aux.candidate_bits = cands.size() * 64;
  return res;
}

std::vector<uint8_t> lz_decode(const FactorList& factors) {
  std::vector<uint8_t> out;
  for (const Factor& f : factors) {
    if (f.is_literal) {
      out.push_back(f.literal);
    } else {
      if (f.src < 1 || f.src > out.size() || f.len < 1)
        throw std::invalid_argument("lz_decode: malformed reference");
      for (uint64_t k = 0; k < f.len; ++k) out.push_back(out[f.src - 1 + k]);
    }
  }
  return out;
}

}  // namespace lzc
