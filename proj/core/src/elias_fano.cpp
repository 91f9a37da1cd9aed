#include "lzc/elias_fano.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace lzc {

namespace {

// V-routing table for the bit-parallel phase: key is an 8-bit chunk of V
// and the phase bits of its ones (packed low-first in consumption order);
// value packs the chunks appended to V0 and V1 with their lengths.
struct VRoute {
  std::array<uint32_t, 65536> t{};
  VRoute() {
    for (uint32_t v = 0; v < 256; ++v) {
      uint32_t tcnt = static_cast<uint32_t>(std::popcount(v));
      for (uint32_t m = 0; m < (1u << tcnt); ++m) {
        uint32_t v0 = 0, l0 = 0, v1 = 0, l1 = 0, k = 0;
        for (uint32_t pos = 0; pos < 8; ++pos) {
          if (!(v & (1u << pos))) {
            ++l0;  // zeros copy to both sides
            ++l1;
          } else if ((m >> k++) & 1u) {
            v1 |= 1u << l1;
            ++l1;
          } else {
            v0 |= 1u << l0;
            ++l0;
          }
        }
        t[(v << 8) | m] = v0 | (l0 << 8) | (v1 << 12) | (l1 << 20);
      }
    }
  }
};

const uint32_t* vroute_table() {
  static const VRoute tab;
  return tab.t.data();
}

uint64_t read_bits(const std::vector<uint64_t>& words, size_t pos, uint32_t len) {
  size_t w = pos >> 6, off = pos & 63;
  uint64_t lo = words[w] >> off;
  if (off + len > 64 && w + 1 < words.size()) lo |= words[w + 1] << (64 - off);
  return len >= 64 ? lo : lo & ((uint64_t{1} << len) - 1);
}

}  // namespace

EliasFanoSeq::EliasFanoSeq(std::span<const uint64_t> keys, uint64_t u, uint64_t v) {
  for (size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] < 1 || keys[i] > u) throw std::invalid_argument("EliasFanoSeq: key outside universe");
    if (i > 0 && keys[i] <= keys[i - 1]) throw std::invalid_argument("EliasFanoSeq: keys not strictly increasing");
  }
  universe_ = ceil_pow2(u ? u : 1);
  buckets_ = ceil_pow2(v ? v : 1);
  if (buckets_ > universe_) buckets_ = universe_;
  low_width_ = log2_pow2(universe_ / buckets_);
  n_ = keys.size();
  low_ = PackedIntVector(n_, low_width_);
  BitBuffer high;
  uint64_t prev_bucket = 0;
  for (size_t i = 0; i < n_; ++i) {
    uint64_t x = keys[i] - 1;
    uint64_t b = x >> low_width_;
    while (prev_bucket < b) { high.append_bit(false); ++prev_bucket; }
    high.append_bit(true);
    low_.set(i, x & low_.mask());
  }
  while (prev_bucket < buckets_) { high.append_bit(false); ++prev_bucket; }
  high_ = BitVector(std::move(high));
  build_samples();
}

EliasFanoSeq EliasFanoSeq::from_parts(PackedIntVector low, BitBuffer high, size_t n,
                                      uint64_t universe, uint64_t buckets) {
  EliasFanoSeq ef;
  ef.universe_ = universe;
  ef.buckets_ = buckets;
  ef.low_width_ = log2_pow2(universe / buckets);
  ef.n_ = n;
  ef.low_ = std::move(low);
  ef.high_ = BitVector(std::move(high));
  ef.build_samples();
  return ef;
}

void EliasFanoSeq::build_samples() {
  uint32_t lg = bit_width_u64(universe_ > 1 ? universe_ - 1 : 1);
  sample_stride_ = std::max(1u, lg * lg);
  grid_.clear();
  grid_cell_ = 0;
  samples_ = PackedIntVector(0, bit_width_u64(universe_));
  if (n_ == 0 || sample_stride_ >= n_) return;
  for (size_t k = 1; k <= n_; k += sample_stride_) samples_.push_back(select(k));
  if (samples_.size() <= 16) return;  // plain binary search is enough
  // coarse value grid over the samples, about half as many cells as samples
  size_t target_cells = samples_.size() / 2 + 1;
  grid_cell_ = ceil_pow2(std::max<uint64_t>(1, universe_ / target_cells));
  size_t cells = static_cast<size_t>(universe_ / grid_cell_) + 1;
  grid_.assign(cells + 1, 0);
  size_t j = 0;
  for (size_t g = 0; g < cells + 1; ++g) {
    uint64_t limit = (static_cast<uint64_t>(g) + 1) * grid_cell_;  // cell g covers [g*cell, (g+1)*cell)
    while (j < samples_.size() && samples_.get(j) < limit) ++j;
    grid_[g] = static_cast<uint32_t>(j);
  }
}

uint64_t EliasFanoSeq::select(size_t k) const {
  if (k < 1 || k > n_) throw std::out_of_range("EliasFanoSeq::select: ordinal out of range");
  size_t pos = high_.select(true, k);
  uint64_t bucket = pos - k;  // zeros before the k-th one
  return (bucket << low_width_ | low_.get(k - 1)) + 1;
}

size_t EliasFanoSeq::rank(uint64_t q) const {
  if (q > universe_) q = universe_;
  if (n_ == 0 || q == 0) return 0;
  size_t lo = 1, hi = n_;  // candidate ordinal window
  if (samples_.size() > 0) {
    size_t jlo = 0, jhi = samples_.size();
    if (!grid_.empty()) {
      size_t g = static_cast<size_t>((q - 1) / grid_cell_);
      jlo = g == 0 ? 0 : grid_[g - 1];
      jhi = grid_[g];  // samples with value < (g+1)*cell
    }
    // greatest sample index with value <= q
    while (jlo < jhi) {
      size_t mid = (jlo + jhi) / 2;
      if (samples_.get(mid) <= q) jlo = mid + 1; else jhi = mid;
    }
    if (jlo == 0) {
      hi = std::min<size_t>(n_, sample_stride_);
    } else {
      lo = (jlo - 1) * static_cast<size_t>(sample_stride_) + 1;
      hi = std::min<size_t>(n_, jlo * static_cast<size_t>(sample_stride_));
    }
  }
  if (select(lo) > q) return lo - 1;
  while (lo < hi) {
    size_t mid = (lo + hi + 1) / 2;
    if (select(mid) <= q) lo = mid; else hi = mid - 1;
  }
  return lo;
}

size_t EliasFanoSeq::size_in_bits() const {
  return low_.size() * low_width_ + high_.size_in_bits() +
         samples_.size() * samples_.width() + grid_.size() * 32 + 192;
}

void EliasFanoSeq::canonical_bytes(std::vector<uint8_t>& out) const {
  auto put64 = [&](uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
  };
  put64(n_);
  put64(universe_);
  put64(buckets_);
  put64(low_width_);
  put64(low_.size());
  size_t low_bits = low_.size() * low_width_;
  for (size_t w = 0; w < (low_bits + 63) / 64; ++w) put64(low_.words()[w]);
  put64(high_.size());
  for (size_t w = 0; w < (high_.size() + 63) / 64; ++w) put64(high_.words()[w]);
  put64(sample_stride_);
  for (size_t j = 0; j < samples_.size(); ++j) put64(samples_.get(j));
}

void CharPredecessorSet::ef_params(size_t n, uint32_t sigma, uint64_t& u, uint64_t& v) {
  uint64_t sig = ceil_pow2(sigma ? sigma : 1);
  u = std::max<uint64_t>(ceil_pow2(n ? n : 1), sig);
  v = u / sig;
}

CharPredecessorSet CharPredecessorSet::build_simple(std::span<const uint32_t> seq, uint32_t sigma) {
  if (sigma < 1) throw std::invalid_argument("CharPredecessorSet: sigma must be >= 1");
  CharPredecessorSet cps;
  cps.sigma_ = sigma;
  cps.n_ = seq.size();
  std::vector<std::vector<uint64_t>> positions(sigma);
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= sigma) throw std::invalid_argument("CharPredecessorSet: symbol out of alphabet");
    positions[seq[i]].push_back(i + 1);
  }
  uint64_t u, v;
  ef_params(seq.size(), sigma, u, v);
  cps.per_char_.reserve(sigma);
  for (uint32_t c = 0; c < sigma; ++c) cps.per_char_.emplace_back(positions[c], u, v);
  return cps;
}

CharPredecessorSet CharPredecessorSet::build_bitparallel(std::span<const uint32_t> seq, uint32_t sigma) {
  if (sigma < 1 || !std::has_single_bit(sigma))
    throw std::invalid_argument("CharPredecessorSet: sigma must be a power of two");
  for (uint32_t s : seq)
    if (s >= sigma) throw std::invalid_argument("CharPredecessorSet: symbol out of alphabet");
  CharPredecessorSet cps;
  cps.sigma_ = sigma;
  cps.n_ = seq.size();
  size_t n = seq.size();
  uint64_t u, v;
  ef_params(n, sigma, u, v);
  uint32_t k = log2_pow2(sigma);
  uint32_t low_width = log2_pow2(u / v);  // == k when u >= sigma

  struct Stream {
    PackedIntVector a;  // low-bit tails
    BitBuffer vbits;    // bucketed unary high part
    PackedIntVector y;  // symbols (full codes kept through all phases)
  };

  // Phase 0 state: (A, V) encode the position sequence 1..n itself.
  auto init = std::make_unique<Stream>();
  init->a = PackedIntVector(n, low_width);
  init->y = PackedIntVector(n, k);
  uint64_t bucket_width = u / v;
  for (size_t i = 0; i < n; ++i) {
    init->a.set(i, i & init->a.mask());
    init->y.set(i, seq[i]);
  }
  for (uint64_t b = 0; b < v; ++b) {
    uint64_t lo = b * bucket_width, hi = std::min<uint64_t>(n, lo + bucket_width);
    for (uint64_t i = lo; i < hi; ++i) init->vbits.append_bit(true);
    init->vbits.append_bit(false);
  }

  std::vector<std::unique_ptr<Stream>> cur;
  cur.push_back(std::move(init));
  const uint32_t* route = vroute_table();
  const uint64_t* part = partition8_table();

  for (uint32_t phase = 0; phase < k; ++phase) {
    uint32_t shift = k - 1 - phase;  // phase splits by the (phase+1)-th msb
    std::vector<std::unique_ptr<Stream>> next;
    next.reserve(cur.size() * 2);
    for (auto& st : cur) {
      auto s0 = std::make_unique<Stream>();
      auto s1 = std::make_unique<Stream>();
      s0->a = PackedIntVector(0, low_width);
      s1->a = PackedIntVector(0, low_width);
      s0->y = PackedIntVector(0, k);
      s1->y = PackedIntVector(0, k);
      size_t vlen = st->vbits.size();
      const auto& vwords = st->vbits.words();
      size_t vpos = 0, e = 0;  // bit cursor in V, element cursor in A/Y
      while (vpos + 8 <= vlen) {
        uint32_t vblk = static_cast<uint32_t>(read_bits(vwords, vpos, 8));
        uint32_t t = static_cast<uint32_t>(std::popcount(vblk));
        uint32_t m = 0;
        for (uint32_t j = 0; j < t; ++j)
          m |= static_cast<uint32_t>((st->y.get(e + j) >> shift) & 1u) << j;
        uint32_t rt = route[(vblk << 8) | m];
        s0->vbits.append_bits(rt & 0xff, (rt >> 8) & 0xf);
        s1->vbits.append_bits((rt >> 12) & 0xff, (rt >> 20) & 0xf);
        uint64_t order = part[(m | (0xffu << t)) & 0xffu];
        uint32_t zeros = static_cast<uint32_t>(order >> 32);
        for (uint32_t s = 0; s < t; ++s) {
          uint32_t slot = (order >> (4 * s)) & 15;
          Stream* dst = (s < zeros) ? s0.get() : s1.get();
          dst->a.push_back(st->a.get(e + slot));
          dst->y.push_back(st->y.get(e + slot));
        }
        vpos += 8;
        e += t;
      }
      for (; vpos < vlen; ++vpos) {  // tail chunk, below table width
        if (!st->vbits.get(vpos)) {
          s0->vbits.append_bit(false);
          s1->vbits.append_bit(false);
        } else {
          Stream* dst = ((st->y.get(e) >> shift) & 1u) ? s1.get() : s0.get();
          dst->vbits.append_bit(true);
          dst->a.push_back(st->a.get(e));
          dst->y.push_back(st->y.get(e));
          ++e;
        }
      }
      st.reset();
      next.push_back(std::move(s0));
      next.push_back(std::move(s1));
    }
    cur = std::move(next);
  }

  cps.per_char_.reserve(sigma);
  for (uint32_t c = 0; c < sigma; ++c) {
    auto& st = cur[c];
    cps.per_char_.push_back(EliasFanoSeq::from_parts(
        std::move(st->a), std::move(st->vbits), st->y.size(), u, v));
  }
  return cps;
}

std::optional<std::pair<size_t, size_t>>
CharPredecessorSet::range_occ(uint32_t c, size_t x1, size_t x2) const {
  if (c >= sigma_) throw std::out_of_range("CharPredecessorSet::range_occ: symbol");
  if (x1 < 1 || x1 > x2 || x2 > n_) throw std::out_of_range("CharPredecessorSet::range_occ: range");
  const EliasFanoSeq& ef = per_char_[c];
  size_t before = ef.rank(x1 - 1);
  size_t upto = ef.rank(x2);
  if (upto <= before) return std::nullopt;
  return std::make_pair(ef.select(before + 1), ef.select(upto));
}

size_t CharPredecessorSet::size_in_bits() const {
  size_t bits = 64;
  for (const auto& ef : per_char_) bits += ef.size_in_bits();
  return bits;
}

std::vector<uint8_t> CharPredecessorSet::canonical_bytes() const {
  std::vector<uint8_t> out;
  for (const auto& ef : per_char_) ef.canonical_bytes(out);
  return out;
}

}  // namespace lzc
