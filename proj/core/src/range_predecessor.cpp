#include "lzc/range_predecessor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lzc {

PointSet PointSet::from_y_of_x(std::vector<uint32_t> y) {
  size_t n = y.size();
  std::vector<uint8_t> seen(n + 1, 0);
  for (uint32_t v : y) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("PointSet: not a permutation");
    seen[v] = 1;
  }
  return PointSet{std::move(y)};
}

size_t RpNode::size_in_bits() const {
  return chunks.size() * width + wt.size_in_bits() + cps.size_in_bits() +
         rmin.size_in_bits() + rmax.size_in_bits() + children.size() * 64 + 64;
}

uint32_t RpNode::child(uint32_t chunk) const {
  auto it = std::lower_bound(children.begin(), children.end(),
                             std::make_pair(chunk, uint32_t{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == children.end() || it->first != chunk) return UINT32_MAX;
  return it->second;
}

std::vector<uint32_t> RangePredIndex::plan_widths(uint32_t code_width, uint32_t c) {
  if (c <= 1) return {code_width};
  uint32_t t = static_cast<uint32_t>(std::ceil(std::pow(double(code_width), 1.0 / c) - 1e-9));
  if (t < 1) t = 1;
  if (t > code_width) t = code_width;
  std::vector<uint32_t> widths;
  uint32_t rest = code_width;
  while (rest > t) {
    widths.push_back(t);
    rest -= t;
  }
  widths.push_back(rest);
  return widths;
}

RangePredIndex::RangePredIndex(const PointSet& points, uint32_t c) {
  n_ = points.y_of_x.size();
  if (n_ == 0) throw std::invalid_argument("RangePredIndex: empty point set");
  {
    std::vector<uint8_t> seen(n_ + 1, 0);
    for (uint32_t v : points.y_of_x) {
      if (v < 1 || v > n_ || seen[v]) throw std::invalid_argument("RangePredIndex: invalid point set");
      seen[v] = 1;
    }
  }
  x_of_y_.assign(n_ + 1, 0);
  for (size_t x = 1; x <= n_; ++x) x_of_y_[points.y_of_x[x - 1]] = static_cast<uint32_t>(x);

  code_width_ = n_ > 1 ? bit_width_u64(n_ - 1) : 1;
  uint32_t cmax = bit_width_u64(code_width_ > 1 ? code_width_ - 1 : 1) + 1;
  c_ = std::max<uint32_t>(1, std::min(c, cmax));
  widths_ = plan_widths(code_width_, c_);
  size_t levels = widths_.size();

  // level-by-level stable chunk splitting; `pending` carries the codes
  // still to be consumed below each node
  struct Pending {
    uint32_t node_id;
    uint32_t level;
    std::vector<uint32_t> codes;  // remaining bits, left-aligned at width_left
    uint32_t width_left;
  };
  std::vector<uint32_t> root_codes(n_);
  for (size_t x = 0; x < n_; ++x) root_codes[x] = points.y_of_x[x] - 1;

  std::vector<Pending> queue;
  nodes_.push_back(std::make_unique<RpNode>());
  queue.push_back({0, 0, std::move(root_codes), code_width_});

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Pending cur = std::move(queue[qi]);
    queue[qi].codes = {};
    RpNode& node = *nodes_[cur.node_id];
    uint32_t w = widths_[cur.level];
    uint32_t shift = cur.width_left - w;
    node.width = w;
    size_t m = cur.codes.size();
    node.chunks = PackedIntVector(m, w);
    std::vector<uint32_t> chunk_seq(m);
    for (size_t i = 0; i < m; ++i) {
      uint32_t ch = (cur.codes[i] >> shift) & ((w >= 32 ? 0 : (1u << w)) - 1u);
      if (w >= 32) ch = cur.codes[i] >> shift;
      node.chunks.set(i, ch);
      chunk_seq[i] = ch;
    }
    uint32_t sigma_chunk = (w >= 31) ? 0 : (1u << w);
    if (sigma_chunk == 0) throw std::invalid_argument("RangePredIndex: chunk width too large");
    node.wt = WaveletTree(chunk_seq, sigma_chunk);
    if (cur.level + 1 < levels) {
      // last-level nodes are never descended from, so they carry no
      // predecessor sets
      node.cps = (w <= 8) ? CharPredecessorSet::build_bitparallel(chunk_seq, sigma_chunk)
                          : CharPredecessorSet::build_simple(chunk_seq, sigma_chunk);
    }
    size_t rmq_block = (w <= 8) ? size_t{16} / w : size_t{8};
    node.rmin = SampledRmq(&node.chunks, false, rmq_block);
    node.rmax = SampledRmq(&node.chunks, true, rmq_block);

    if (cur.level + 1 < levels) {
      // stable bucket split by chunk value
      std::vector<uint32_t> cnt(sigma_chunk + 1, 0);
      for (uint32_t ch : chunk_seq) ++cnt[ch + 1];
      for (uint32_t v = 1; v <= sigma_chunk; ++v) cnt[v] += cnt[v - 1];
      std::vector<uint32_t> child_codes(m);
      uint32_t lo_mask = shift >= 32 ? ~0u : ((1u << shift) - 1u);
      std::vector<uint32_t> fill(cnt.begin(), cnt.end() - 1);
      for (size_t i = 0; i < m; ++i)
        child_codes[fill[chunk_seq[i]]++] = cur.codes[i] & lo_mask;
      cur.codes = {};
      for (uint32_t v = 0; v < sigma_chunk; ++v) {
        uint32_t lo = cnt[v], hi = cnt[v + 1];
        if (lo == hi) continue;
        uint32_t id = static_cast<uint32_t>(nodes_.size());
        nodes_.push_back(std::make_unique<RpNode>());
        nodes_[cur.node_id]->children.emplace_back(v, id);
        queue.push_back({id, cur.level + 1,
                         std::vector<uint32_t>(child_codes.begin() + lo, child_codes.begin() + hi),
                         shift});
      }
    }
  }
}

std::optional<std::pair<uint32_t, uint32_t>>
RangePredIndex::query(size_t x1, size_t x2, size_t y2) const {
  if (x1 < 1 || x1 > x2 || x2 > n_) throw std::out_of_range("RangePredIndex::query: bad x range");
  if (y2 < 1 || y2 > n_) throw std::out_of_range("RangePredIndex::query: bad y2");
  // trivial case: y2 itself lies in the x range
  uint32_t xt = x_of_y_[y2];
  if (x1 <= xt && xt <= x2) return std::make_pair(xt, static_cast<uint32_t>(y2));

  uint32_t code = static_cast<uint32_t>(y2 - 1);
  size_t levels = widths_.size();
  struct Step {
    uint32_t node;
    size_t a, b;      // query range inside the node, 1-based
    uint32_t chunk;   // y2's chunk at this level
    uint32_t below;   // code bits below this level's chunk
  };
  std::vector<Step> path;
  path.reserve(levels);
  int pivot = -1;
  uint32_t nid = 0;
  size_t a = x1, b = x2;
  uint32_t width_left = code_width_;
  for (size_t lev = 0; lev < levels; ++lev) {
    const RpNode& node = *nodes_[nid];
    uint32_t w = widths_[lev];
    width_left -= w;
    uint32_t ch = (code >> width_left) & ((w >= 32 ? 0 : (1u << w)) - 1u);
    path.push_back({nid, a, b, ch, width_left});
    // range-min gate: does the range hold a chunk strictly below ch?
    if (ch > 0) {
      size_t mp = node.rmin.query(a, b);
      if (node.chunks.get(mp - 1) < ch) pivot = static_cast<int>(lev);
    }
    if (lev + 1 == levels) break;  // deepest level: nothing to descend into
    size_t lo_r = node.cps.rank(ch, a - 1);
    size_t hi_r = node.cps.rank(ch, b);
    if (hi_r <= lo_r) break;  // chunk absent: phase 1 ends
    nid = node.child(ch);
    a = lo_r + 1;
    b = hi_r;
  }
  if (pivot < 0) return std::nullopt;

  // phase 2: strictly smaller chunk at the pivot, then maximal chunks
  const Step& st = path[pivot];
  const RpNode& pnode = *nodes_[st.node];
  auto wp = pnode.wt.range_pred(st.a, st.b, st.chunk - 1);
  uint32_t val = wp.value().second;  // the rmin gate guarantees a hit
  uint32_t y = val;
  nid = st.node;
  a = st.a;
  b = st.b;
  for (size_t lev = pivot; lev + 1 < levels; ++lev) {
    const RpNode& node = *nodes_[nid];
    size_t lo_r = node.cps.rank(val, a - 1);
    size_t hi_r = node.cps.rank(val, b);
    nid = node.child(val);
    a = lo_r + 1;
    b = hi_r;
    const RpNode& nxt = *nodes_[nid];
    size_t mp = nxt.rmax.query(a, b);
    val = static_cast<uint32_t>(nxt.chunks.get(mp - 1));
    y = (y << widths_[lev + 1]) | val;
  }
  // y now holds the code bits from the pivot chunk down; the bits above it
  // match y2's code
  uint32_t pivot_span = st.below + widths_[pivot];
  if (pivot_span < code_width_) y |= (code >> pivot_span) << pivot_span;
  uint32_t ynum = y + 1;
  return std::make_pair(x_of_y_[ynum], ynum);
}

std::vector<std::pair<uint32_t, uint32_t>>
RangePredIndex::report_sorted(size_t x1, size_t x2, size_t y1, size_t y2, size_t limit) const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  if (limit == 0 || x1 > x2 || y1 > y2) return out;
  size_t ceiling = y2;
  while (out.size() < limit) {
    auto p = query(x1, x2, ceiling);
    if (!p || p->second < y1) break;
    out.push_back(*p);
    if (p->second <= y1) break;
    ceiling = p->second - 1;
  }
  return out;
}

size_t RangePredIndex::size_in_bits() const {
  size_t bits = x_of_y_.size() * 32 + 128;
  for (const auto& nd : nodes_) bits += nd->size_in_bits();
  return bits;
}

}  // namespace lzc
