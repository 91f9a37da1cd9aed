#include "lzc/rightmost.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <memory>
#include <stdexcept>

namespace lzc {

namespace {

// LSD radix sort of intervals by (lo ascending, hi descending).
void radix_sort_intervals(std::vector<std::array<uint32_t, 3>>& v, uint32_t max_pos) {
  std::vector<std::array<uint32_t, 3>> tmp(v.size());
  std::vector<uint32_t> cnt(65537);
  auto pass = [&](auto key, uint32_t shift) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (const auto& e : v) ++cnt[((key(e) >> shift) & 0xffffu) + 1];
    for (size_t d = 1; d < cnt.size(); ++d) cnt[d] += cnt[d - 1];
    for (const auto& e : v) tmp[cnt[(key(e) >> shift) & 0xffffu]++] = e;
    v.swap(tmp);
  };
  auto neg_hi = [max_pos](const std::array<uint32_t, 3>& e) { return max_pos - e[1]; };
  auto lo_key = [](const std::array<uint32_t, 3>& e) { return e[0]; };
  pass(neg_hi, 0);
  pass(neg_hi, 16);
  pass(lo_key, 0);
  pass(lo_key, 16);
}

}  // namespace

QueryTree::QueryTree(size_t n, std::span<const PhraseQuery> queries) : n_(n) {
  std::vector<std::array<uint32_t, 3>> ivs;
  ivs.reserve(queries.size());
  for (size_t q = 0; q < queries.size(); ++q)
    ivs.push_back({static_cast<uint32_t>(queries[q].sa_lo),
                   static_cast<uint32_t>(queries[q].sa_hi),
                   static_cast<uint32_t>(q)});
  radix_sort_intervals(ivs, static_cast<uint32_t>(n_));

  query_at_.reserve(queries.size());
  for (const auto& iv : ivs) {
    if (nodes_.empty() || nodes_.back().lo != iv[0] || nodes_.back().hi != iv[1])
      nodes_.push_back({iv[0], iv[1], -1, -1, -1, 0});
    uint32_t node = static_cast<uint32_t>(nodes_.size() - 1);
    query_at_.push_back({queries[iv[2]].start, {node, iv[2]}});
  }
  // parents via a containment stack (intervals arrive outer-first)
  std::vector<int32_t> stack;
  for (size_t v = 0; v < nodes_.size(); ++v) {
    while (!stack.empty() && nodes_[stack.back()].hi < nodes_[v].lo) stack.pop_back();
    if (!stack.empty()) {
      if (nodes_[stack.back()].hi < nodes_[v].hi) laminar_ok_ = false;
      nodes_[v].parent = stack.back();
      nodes_[v].next_sib = nodes_[stack.back()].first_child;
      nodes_[stack.back()].first_child = static_cast<int32_t>(v);
    }
    stack.push_back(static_cast<int32_t>(v));
  }
  // deepest marked node per SA position
  nma_.assign(n_ + 1, -1);
  stack.clear();
  size_t next_node = 0;
  for (size_t p = 1; p <= n_; ++p) {
    while (!stack.empty() && nodes_[stack.back()].hi < p) stack.pop_back();
    while (next_node < nodes_.size() && nodes_[next_node].lo == p) {
      stack.push_back(static_cast<int32_t>(next_node));
      ++next_node;
    }
    nma_[p] = stack.empty() ? -1 : stack.back();
  }
  std::sort(query_at_.begin(), query_at_.end());
}

uint64_t QueryTree::subtree_max(size_t v) const {
  uint64_t best = 0;
  std::vector<int32_t> dfs{static_cast<int32_t>(v)};
  while (!dfs.empty()) {
    int32_t u = dfs.back();
    dfs.pop_back();
    best = std::max(best, nodes_[u].p_max);
    for (int32_t ch = nodes_[u].first_child; ch >= 0; ch = nodes_[ch].next_sib)
      dfs.push_back(ch);
  }
  return best;
}

std::vector<uint64_t> QueryTree::resolve(const TextIndex& ti) {
  size_t total = query_at_.size();
  std::vector<uint64_t> by_query(total, 0);
  size_t m = ti.n() - 1;
  size_t j = ti.isa_first();
  size_t qi = 0;
  for (size_t i = 1; i <= m; ++i) {
    while (qi < query_at_.size() && query_at_[qi].first == i) {
      by_query[qi] = subtree_max(query_at_[qi].second.first);
      ++qi;
    }
    int32_t a = nma_[j];
    if (a >= 0) nodes_[a].p_max = std::max(nodes_[a].p_max, static_cast<uint64_t>(i));
    if (i < m) j = ti.fl(j);
  }
  // map back to the caller's query order
  std::vector<uint64_t> out(total, 0);
  for (size_t k = 0; k < query_at_.size(); ++k) out[query_at_[k].second.second] = by_query[k];
  return out;
}

std::vector<uint64_t> rightmost_basic(const TextIndex& ti, std::span<const PhraseQuery> queries) {
  QueryTree qt(ti.n(), queries);
  return qt.resolve(ti);
}

const uint16_t* reverse16_table(uint32_t width) {
  static std::array<std::unique_ptr<std::array<uint16_t, 65536>>, 17> tables;
  auto& slot = tables[width];
  if (!slot) {
    auto t = std::make_unique<std::array<uint16_t, 65536>>();
    uint32_t per = 16 / width;
    uint32_t mask = width == 16 ? 0xffffu : ((1u << width) - 1);
    for (uint32_t x = 0; x < 65536; ++x) {
      uint32_t out = 0;
      for (uint32_t j = 0; j < per; ++j) {
        uint32_t f = (x >> (j * width)) & mask;
        out |= f << ((per - 1 - j) * width);
      }
      (*t)[x] = static_cast<uint16_t>(out);
    }
    slot = std::move(t);
  }
  return slot->data();
}

PackedIntVector reverse_packed_fields(const PackedIntVector& in, uint32_t width) {
  if (16 % width != 0) throw std::invalid_argument("reverse_packed_fields: width must divide 16");
  const uint16_t* rev = reverse16_table(width);
  size_t count = in.size();
  size_t bits = count * width;
  size_t nwin = (bits + 15) / 16;
  size_t pad = nwin * 16 - bits;
  const auto& words = in.words();
  auto win_at = [&](size_t t) -> uint16_t {
    size_t bit = t * 16;
    size_t w = bit >> 6, off = bit & 63;
    uint64_t lo = w < words.size() ? words[w] >> off : 0;
    if (off > 48 && w + 1 < words.size()) lo |= words[w + 1] << (64 - off);
    return static_cast<uint16_t>(lo);
  };
  std::vector<uint64_t> padded(nwin / 4 + 2, 0);
  for (size_t t = 0; t < nwin; ++t) {
    uint64_t v = rev[win_at(nwin - 1 - t)];
    padded[(t * 16) >> 6] |= v << ((t * 16) & 63);
  }
  PackedIntVector out(count, width);
  // drop the reversed padding from the front: shift right by `pad` bits
  std::vector<uint64_t> shifted(padded.size(), 0);
  for (size_t w = 0; w < shifted.size(); ++w) {
    uint64_t lo = padded[w] >> pad;
    uint64_t hi = (pad && w + 1 < padded.size()) ? padded[w + 1] << (64 - pad) : 0;
    shifted[w] = pad ? (lo | hi) : padded[w];
  }
  for (size_t i = 0; i < count; ++i) {
    size_t bit = i * width;
    size_t w = bit >> 6, off = bit & 63;
    uint64_t lo = shifted[w] >> off;
    if (off + width > 64) lo |= shifted[w + 1] << (64 - off);
    out.set(i, lo & out.mask());
  }
  return out;
}

LongFactorIndex::LongFactorIndex(const TextIndex& fwd, uint64_t r, uint64_t ell)
    : r_(r), ell_(ell) {
  size_t m = fwd.n() - 1;
  k_ = r_ ? m / r_ : 0;
  uint32_t need = bit_width_u64(fwd.sigma() > 1 ? fwd.sigma() - 1 : 1);
  field_width_ = 1;
  while (field_width_ < need) field_width_ *= 2;  // 1,2,4,8,16
  if (k_ == 0) return;

  const auto& sym = fwd.text().sym;
  revblocks_ = PackedIntVector(k_ * r_, field_width_);
  {
    PackedIntVector fwd_block(r_, field_width_);
    for (size_t i = 1; i <= k_; ++i) {
      for (size_t j = 0; j < r_; ++j) fwd_block.set(j, sym[(i - 1) * r_ + j]);
      PackedIntVector rb = reverse_packed_fields(fwd_block, field_width_);
      for (size_t j = 0; j < r_; ++j) revblocks_.set((i - 1) * r_ + j, rb.get(j));
    }
  }
  order_.resize(k_);
  for (size_t i = 0; i < k_; ++i) order_[i] = static_cast<uint32_t>(i + 1);
  std::sort(order_.begin(), order_.end(), [&](uint32_t a, uint32_t b) {
    for (size_t j = 0; j < r_; ++j) {
      uint64_t fa = revblocks_.get((a - 1) * r_ + j);
      uint64_t fb = revblocks_.get((b - 1) * r_ + j);
      if (fa != fb) return fa < fb;
    }
    return a < b;
  });
  rank_of_.assign(k_ + 1, 0);
  for (size_t p = 0; p < k_; ++p) rank_of_[order_[p]] = static_cast<uint32_t>(p + 1);

  // suffix rank after each split point
  std::vector<uint32_t> isa(fwd.n() + 1, 0);
  for (size_t j = 1; j <= fwd.n(); ++j) isa[fwd.sa_at(j)] = static_cast<uint32_t>(j);

  leaves_ = std::bit_ceil(k_);
  // merge points bottom-up through the dyadic tree, then rank-reduce y
  // inside each node so the per-node wavelet trees stay small
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pts(2 * leaves_);
  for (size_t i = 1; i <= k_; ++i)
    pts[leaves_ + i - 1] = {{rank_of_[i], isa[i * r_ + 1]}};
  for (size_t v = leaves_ - 1; v >= 1; --v) {
    const auto& l = pts[2 * v];
    const auto& rgt = pts[2 * v + 1];
    auto& out = pts[v];
    out.resize(l.size() + rgt.size());
    std::merge(l.begin(), l.end(), rgt.begin(), rgt.end(), out.begin());
  }
  strata_.resize(2 * leaves_);
  // TODO: pool the per-stratum bitvector storage; for one-point leaves the
  // member arrays outweigh the payload.
  for (size_t v = 1; v < strata_.size(); ++v) {
    auto s = std::make_unique<Stratum>();
    const auto& p = pts[v];
    s->xs.reserve(p.size());
    s->ys_sorted.reserve(p.size());
    for (const auto& [x, y] : p) {
      s->xs.push_back(x);
      s->ys_sorted.push_back(y);
    }
    std::sort(s->ys_sorted.begin(), s->ys_sorted.end());
    std::vector<uint32_t> ranks(p.size());
    for (size_t i = 0; i < p.size(); ++i)
      ranks[i] = static_cast<uint32_t>(
          std::lower_bound(s->ys_sorted.begin(), s->ys_sorted.end(), p[i].second) -
          s->ys_sorted.begin());
    s->wt = WaveletTree(ranks, std::max<uint32_t>(1, static_cast<uint32_t>(p.size())));
    strata_[v] = std::move(s);
  }
}

int LongFactorIndex::cmp_prefix(uint32_t block_id, const PackedIntVector& probe, size_t d) const {
  for (size_t j = 0; j < d; ++j) {
    uint64_t fb = revblocks_.get((block_id - 1) * r_ + j);
    uint64_t fp = probe.get(j);
    if (fb != fp) return fb < fp ? -1 : 1;
  }
  return 0;
}

bool LongFactorIndex::box_nonempty(const Stratum& s, size_t x1, size_t x2,
                                   size_t y1, size_t y2) const {
  if (s.xs.empty()) return false;
  size_t la = std::lower_bound(s.xs.begin(), s.xs.end(), x1) - s.xs.begin();
  size_t lb = std::upper_bound(s.xs.begin(), s.xs.end(), x2) - s.xs.begin();
  if (la >= lb) return false;
  size_t r_lo = std::lower_bound(s.ys_sorted.begin(), s.ys_sorted.end(), y1) -
                s.ys_sorted.begin();
  size_t r_hi = std::upper_bound(s.ys_sorted.begin(), s.ys_sorted.end(), y2) -
                s.ys_sorted.begin();
  if (r_hi <= r_lo) return false;
  auto rp = s.wt.range_pred(la + 1, lb, static_cast<uint32_t>(r_hi - 1));
  return rp && rp->second >= r_lo;
}

int64_t LongFactorIndex::max_block_rec(size_t node, size_t lo, size_t hi, size_t zmax,
                                       size_t x1, size_t x2, size_t y1, size_t y2) const {
  if (lo > zmax) return -1;
  const Stratum& s = *strata_[node];
  if (!box_nonempty(s, x1, x2, y1, y2)) return -1;
  if (lo == hi) return static_cast<int64_t>(lo);
  size_t mid = (lo + hi) / 2;
  if (mid + 1 <= zmax) {
    int64_t r = max_block_rec(2 * node + 1, mid + 1, hi, zmax, x1, x2, y1, y2);
    if (r > 0) return r;
  }
  return max_block_rec(2 * node, lo, mid, zmax, x1, x2, y1, y2);
}

uint64_t LongFactorIndex::query(const TextIndex& fwd, uint64_t start, uint64_t len) const {
  if (len < ell_) throw std::invalid_argument("LongFactorIndex::query: factor below threshold");
  if (k_ == 0) return 0;
  const auto& sym = fwd.text().sym;
  uint64_t dmax = std::min<uint64_t>(r_, len);
  // SA intervals of the phrase suffixes needed by the alignment offsets
  std::vector<std::pair<size_t, size_t>> interv(dmax + 1, {0, 0});
  {
    std::pair<size_t, size_t> cur{1, fwd.n()};
    for (uint64_t k = 1; k + 1 <= len; ++k) {
      uint32_t c = sym[start + len - k - 1];  // symbol at text position start+len-k
      auto nr = fwd.backward_search_step(cur, c);
      cur = nr.value();
      uint64_t d = len - k;
      if (d <= dmax) interv[d] = cur;
    }
  }
  uint64_t best = 0;
  PackedIntVector head(dmax, field_width_);
  for (uint64_t j = 0; j < dmax; ++j) head.set(j, sym[start + j - 1]);
  for (uint64_t d = 1; d <= dmax; ++d) {
    uint64_t zd = (start + d - 2) / r_;
    if (zd == 0) continue;
    if (zd > k_) zd = k_;
    PackedIntVector probe_fwd(d, field_width_);
    for (uint64_t j = 0; j < d; ++j) probe_fwd.set(j, head.get(j));
    PackedIntVector probe = reverse_packed_fields(probe_fwd, field_width_);
    auto lo_it = std::partition_point(order_.begin(), order_.end(), [&](uint32_t id) {
      return cmp_prefix(id, probe, d) < 0;
    });
    auto hi_it = std::partition_point(lo_it, order_.end(), [&](uint32_t id) {
      return cmp_prefix(id, probe, d) == 0;
    });
    if (lo_it == hi_it) continue;
    size_t x1 = static_cast<size_t>(lo_it - order_.begin()) + 1;
    size_t x2 = static_cast<size_t>(hi_it - order_.begin());
    size_t y1 = 1, y2 = fwd.n();
    if (d < len) {
      y1 = interv[d].first;
      y2 = interv[d].second;
      if (y1 == 0) continue;
    }
    int64_t blk = max_block_rec(1, 1, leaves_, zd, x1, x2, y1, y2);
    if (blk >= 1) {
      uint64_t cand = static_cast<uint64_t>(blk) * r_ - d + 1;
      best = std::max(best, cand);
    }
  }
  return best;
}

BlockPredIndex::BlockPredIndex(const TextIndex& ti, size_t block_size, uint32_t rp_c)
    : B_(block_size) {
  size_t M = ti.n();
  size_t m = M - 1;
  size_t nb = (M + B_ - 1) / B_;
  struct Raw {
    std::vector<uint64_t> ys;
    std::vector<std::pair<uint32_t, uint32_t>> pts;  // (sa_pos, y rank)
  };
  std::vector<Raw> raw(nb);
  size_t j = ti.isa_first();
  for (size_t y = 1; y <= m; ++y) {
    size_t k = (j - 1) / B_;
    raw[k].ys.push_back(y);
    raw[k].pts.emplace_back(static_cast<uint32_t>(j),
                            static_cast<uint32_t>(raw[k].ys.size()));
    if (y < m) j = ti.fl(j);
  }
  blocks_.resize(nb);
  for (size_t k = 0; k < nb; ++k) {
    Raw& rw = raw[k];
    Block& bl = blocks_[k];
    if (rw.pts.empty()) continue;
    std::sort(rw.pts.begin(), rw.pts.end());
    bl.sa_pos.reserve(rw.pts.size());
    std::vector<uint32_t> y_of_x;
    y_of_x.reserve(rw.pts.size());
    for (auto& [sp, yr] : rw.pts) {
      bl.sa_pos.push_back(sp);
      y_of_x.push_back(yr);
    }
    bl.rp = std::make_unique<RangePredIndex>(PointSet::from_y_of_x(std::move(y_of_x)), rp_c);
    bl.ys = EliasFanoSeq(rw.ys, M, ceil_pow2(rw.ys.size()));
  }
}

std::optional<uint64_t> BlockPredIndex::query(size_t sa_lo, size_t sa_hi, uint64_t before) const {
  size_t k = (sa_lo - 1) / B_;
  if (k != (sa_hi - 1) / B_) throw std::invalid_argument("BlockPredIndex::query: crosses a boundary");
  const Block& bl = blocks_[k];
  if (!bl.rp) return std::nullopt;
  size_t la = std::lower_bound(bl.sa_pos.begin(), bl.sa_pos.end(), sa_lo) - bl.sa_pos.begin();
  size_t lb = std::upper_bound(bl.sa_pos.begin(), bl.sa_pos.end(), sa_hi) - bl.sa_pos.begin();
  if (la >= lb) return std::nullopt;
  size_t y2r = bl.ys.rank(before);
  if (y2r == 0) return std::nullopt;
  auto res = bl.rp->query(la + 1, lb, y2r);
  if (!res) return std::nullopt;
  return bl.ys.select(res->second);
}

RightmostResult rightmost_parse(std::span<const uint8_t> text, RightmostConfig cfg) {
  RightmostResult out;
  size_t m = text.size();
  if (m == 0) return out;

  LzParseResult base = lz_parse(text);
  out.factors = std::move(base.factors);

  TextIndex fwd(make_text(text));
  size_t M = fwd.n();
  uint32_t lg = bit_width_u64(m > 1 ? m - 1 : 1);
  uint64_t ell = cfg.ell ? cfg.ell : std::max<uint64_t>(8, uint64_t(lg) * lg);
  uint64_t r = cfg.r ? cfg.r : std::max<uint64_t>(2, lg);
  uint64_t block = cfg.block
                       ? cfg.block
                       : std::max<uint64_t>(16, r * r * std::min<uint64_t>(fwd.sigma(), 16));
  if (r < 1 || r > ell) throw std::invalid_argument("rightmost_parse: need 1 <= r <= ell");
  if (block < 2) throw std::invalid_argument("rightmost_parse: block size must be >= 2");
  out.stats.ell = ell;
  out.stats.r = r;
  out.stats.block = block;

  // SA intervals of all reference phrases over the forward text
  std::vector<PhraseQuery> queries;
  {
    uint64_t pos = 1;
    for (size_t f = 0; f < out.factors.size(); ++f) {
      const Factor& fc = out.factors[f];
      if (fc.is_literal) {
        ++out.stats.literals;
        pos += 1;
        continue;
      }
      std::pair<size_t, size_t> cur{1, M};
      for (uint64_t k = 0; k < fc.len; ++k) {
        uint32_t c = fwd.text().sym[pos + fc.len - k - 2];
        cur = fwd.backward_search_step(cur, c).value();
      }
      queries.push_back({pos, fc.len, cur.first, cur.second, static_cast<uint32_t>(f)});
      pos += fc.len;
    }
  }

  if (cfg.mode == RightmostMode::basic) {
    auto srcs = rightmost_basic(fwd, queries);
    for (size_t q = 0; q < queries.size(); ++q)
      out.factors[queries[q].factor].src = srcs[q];
    return out;
  }

  std::vector<PhraseQuery> long_q, boundary_q, inblock_q;
  for (const auto& q : queries) {
    if (q.len >= ell) long_q.push_back(q);
    else if ((q.sa_lo - 1) / block != (q.sa_hi - 1) / block) boundary_q.push_back(q);
    else inblock_q.push_back(q);
  }
  out.stats.long_factors = long_q.size();
  out.stats.boundary_factors = boundary_q.size();
  out.stats.inblock_factors = inblock_q.size();

  if (!long_q.empty()) {
    LongFactorIndex lfi(fwd, r, ell);
    for (const auto& q : long_q)
      out.factors[q.factor].src = lfi.query(fwd, q.start, q.len);
  }
  if (!boundary_q.empty()) {
    auto srcs = rightmost_basic(fwd, boundary_q);
    for (size_t q = 0; q < boundary_q.size(); ++q)
      out.factors[boundary_q[q].factor].src = srcs[q];
  }
  if (!inblock_q.empty()) {
    BlockPredIndex bpi(fwd, block);
    for (const auto& q : inblock_q) {
      auto src = bpi.query(q.sa_lo, q.sa_hi, q.start - 1);
      out.factors[q.factor].src = src.value_or(0);
    }
  }
  return out;
}

}  // namespace lzc
