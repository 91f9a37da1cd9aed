#include "lzc/text_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lzc {

Text make_text(std::span<const uint8_t> bytes) {
  Text t;
  std::array<int16_t, 256> code;
  code.fill(-1);
  uint32_t next = 1;
  t.sym.reserve(bytes.size() + 1);
  for (uint8_t b : bytes) {
    if (code[b] < 0) code[b] = static_cast<int16_t>(next++);
    t.sym.push_back(static_cast<uint32_t>(code[b]));
  }
  t.sym.push_back(0);
  t.sigma = next;
  return t;
}

Text make_reversed_text(std::span<const uint8_t> bytes) {
  Text t;
  std::array<int16_t, 256> code;
  code.fill(-1);
  uint32_t next = 1;
  t.sym.reserve(bytes.size() + 1);
  for (size_t i = bytes.size(); i-- > 0;) {
    uint8_t b = bytes[i];
    if (code[b] < 0) code[b] = static_cast<int16_t>(next++);
    t.sym.push_back(static_cast<uint32_t>(code[b]));
  }
  t.sym.push_back(0);
  t.sigma = next;
  return t;
}

namespace {

// SA-IS core, recursing on the reduced problem when LMS names collide.
void sais_rec(const int32_t* s, int32_t* sa, int32_t n, int32_t sigma,
              std::vector<int32_t>& work) {
  if (n == 1) { sa[0] = 0; return; }
  std::vector<uint8_t> stype(n);
  stype[n - 1] = 1;
  for (int32_t i = n - 2; i >= 0; --i)
    stype[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1])) ? 1 : 0;
  auto is_lms = [&](int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<int32_t> counts(sigma, 0);
  for (int32_t i = 0; i < n; ++i) ++counts[s[i]];
  std::vector<int32_t> heads(sigma), tails(sigma);
  auto reset_buckets = [&]() {
    int32_t sum = 0;
    for (int32_t c = 0; c < sigma; ++c) {
      heads[c] = sum;
      sum += counts[c];
      tails[c] = sum - 1;
    }
  };

  auto induce = [&]() {
    reset_buckets();
    for (int32_t i = 0; i < n; ++i) {
      int32_t j = sa[i] - 1;
      if (sa[i] > 0 && !stype[j]) sa[heads[s[j]]++] = j;
    }
    reset_buckets();
    for (int32_t i = n - 1; i >= 0; --i) {
      int32_t j = sa[i] - 1;
      if (sa[i] > 0 && stype[j]) sa[tails[s[j]]--] = j;
    }
  };

  std::vector<int32_t> lms;
  for (int32_t i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  int32_t n_lms = static_cast<int32_t>(lms.size());

  std::fill(sa, sa + n, -1);
  reset_buckets();
  for (int32_t k = n_lms - 1; k >= 0; --k) sa[tails[s[lms[k]]]--] = lms[k];
  induce();

  // name LMS substrings in sorted order
  std::vector<int32_t>& names = work;
  names.assign(n, -1);
  int32_t name_count = 0;
  int32_t prev = -1;
  for (int32_t i = 0; i < n; ++i) {
    int32_t p = sa[i];
    if (p <= 0 || !is_lms(p)) continue;
    if (prev >= 0) {
      int32_t a = p, b = prev;
      bool equal = true;
      while (true) {
        if (s[a] != s[b] || stype[a] != stype[b]) { equal = false; break; }
        ++a; ++b;
        if (a == n || b == n) { equal = (a == n && b == n); break; }
        bool la = is_lms(a), lb = is_lms(b);
        if (la || lb) { equal = la && lb && s[a] == s[b]; break; }
      }
      if (!equal) ++name_count;
    }
    names[p] = name_count;
    prev = p;
  }
  ++name_count;

  std::vector<int32_t> reduced(n_lms), lms_sa(n_lms);
  for (int32_t k = 0; k < n_lms; ++k) reduced[k] = names[lms[k]];
  if (name_count == n_lms) {
    for (int32_t k = 0; k < n_lms; ++k) lms_sa[reduced[k]] = k;
  } else {
    std::vector<int32_t> sub_work;
    sais_rec(reduced.data(), lms_sa.data(), n_lms, name_count, sub_work);
  }

  std::fill(sa, sa + n, -1);
  reset_buckets();
  for (int32_t k = n_lms - 1; k >= 0; --k) {
    int32_t p = lms[lms_sa[k]];
    sa[tails[s[p]]--] = p;
  }
  induce();
}

}  // namespace

std::vector<int32_t> suffix_array_induced(std::span<const uint32_t> s, uint32_t sigma) {
  int32_t n = static_cast<int32_t>(s.size());
  if (n == 0) return {};
  std::vector<int32_t> si(s.begin(), s.end());
  std::vector<int32_t> sa(n);
  std::vector<int32_t> work;
  sais_rec(si.data(), sa.data(), n, static_cast<int32_t>(sigma), work);
  return sa;
}

TextIndex::TextIndex(Text text) : text_(std::move(text)) {
  size_t n = text_.n();
  if (n == 0) throw std::invalid_argument("TextIndex: empty text");
  if (text_.sym.back() != 0) throw std::invalid_argument("TextIndex: sentinel missing");
  std::vector<uint8_t> seen(text_.sigma, 0);
  for (size_t i = 0; i < n; ++i) {
    uint32_t c = text_.sym[i];
    if (c >= text_.sigma) throw std::invalid_argument("TextIndex: symbol out of alphabet");
    if (c == 0 && i + 1 != n) throw std::invalid_argument("TextIndex: sentinel not unique");
    seen[c] = 1;
  }
  for (uint32_t c = 0; c < text_.sigma; ++c)
    if (!seen[c]) throw std::invalid_argument("TextIndex: alphabet not dense");

  sa_ = suffix_array_induced(text_.sym, text_.sigma);

  std::vector<uint32_t> bwt;
  bwt.reserve(n - 1);
  for (size_t j = 0; j < n; ++j) {
    int32_t p = sa_[j];
    if (p == 0) {
      isa_first_ = j + 1;  // the sentinel's slot in L, outlined
    } else {
      bwt.push_back(text_.sym[p - 1] - 1);
    }
  }
  bwt_ = WaveletTree(bwt, std::max<uint32_t>(1, text_.sigma - 1));

  count_.assign(text_.sigma + 1, 0);
  for (uint32_t c : text_.sym) ++count_[c + 1];
  for (uint32_t c = 1; c <= text_.sigma; ++c) count_[c] += count_[c - 1];

  sample_stride_ = std::max<uint32_t>(1, bit_width_u64(n > 1 ? n - 1 : 1));
  std::vector<uint8_t> marks(n, 0);
  for (size_t j = 0; j < n; ++j)
    if (static_cast<uint32_t>(sa_[j]) % sample_stride_ == 0) marks[j] = 1;
  sample_marks_ = BitVector(marks);
  sample_vals_.reserve(n / sample_stride_ + 1);
  for (size_t j = 0; j < n; ++j)
    if (marks[j]) sample_vals_.push_back(static_cast<uint32_t>(sa_[j]) + 1);
}

uint32_t TextIndex::bwt_at(size_t i) const {
  if (i == isa_first_) return 0;
  return bwt_.access(i - (i > isa_first_ ? 1 : 0)) + 1;
}

size_t TextIndex::bwt_rank(uint32_t c, size_t i) const {
  if (c == 0) return i >= isa_first_ ? 1 : 0;
  return bwt_.rank(c - 1, i - (i >= isa_first_ ? 1 : 0));
}

std::optional<std::pair<size_t, size_t>>
TextIndex::backward_search_step(std::pair<size_t, size_t> range, uint32_t c) const {
  auto [s, e] = range;
  if (s < 1 || s > e || e > n()) throw std::out_of_range("backward_search_step: bad range");
  if (c >= sigma()) return std::nullopt;
  size_t s2 = count_[c] + bwt_rank(c, s - 1) + 1;
  size_t e2 = count_[c] + bwt_rank(c, e);
  if (s2 > e2) return std::nullopt;
  return std::make_pair(s2, e2);
}

size_t TextIndex::lf(size_t i) const {
  if (i == isa_first_) return 1;  // the sentinel's slot maps to SA position 1
  auto [c, r] = bwt_.access_and_rank(i - (i > isa_first_ ? 1 : 0));
  return count_[c + 1] + r;
}

size_t TextIndex::fl(size_t j) const {
  uint32_t c = static_cast<uint32_t>(
      std::upper_bound(count_.begin(), count_.end(), j - 1) - count_.begin() - 1);
  if (c == 0) return isa_first_;
  size_t p = bwt_.select(c - 1, j - count_[c]);
  return p + (p >= isa_first_ ? 1 : 0);
}

void TextIndex::invert_bwt_visit(const std::function<void(size_t, size_t)>& visitor) const {
  auto cur = cursor();
  while (!cur.done()) {
    auto [sa_pos, text_pos] = cur.next();
    visitor(sa_pos, text_pos);
  }
}

std::pair<size_t, size_t> TextIndex::InversionCursor::next() {
  size_t sa_pos = cur_;
  size_t text_pos = next_pos_;
  cur_ = ti_->lf(cur_);
  next_pos_ = (text_pos == 1) ? ti_->n() : text_pos - 1;
  ++emitted_;
  return {sa_pos, text_pos};
}

size_t TextIndex::sa_lookup(size_t j) const {
  if (j < 1 || j > n()) throw std::out_of_range("sa_lookup: position out of range");
  size_t steps = 0;
  size_t cur = j;
  while (!sample_marks_.get(cur)) {
    cur = lf(cur);
    ++steps;
  }
  size_t val = sample_vals_[sample_marks_.rank(true, cur) - 1];
  size_t res = val + steps;
  if (res > n()) res -= n();
  return res;
}

}  // namespace lzc
