#include "emergelab/eca.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "emergelab/error.hpp"

namespace emergelab::eca {

namespace {

constexpr std::size_t kWordBits = 64;
// Below this many output words the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelWords = 4096;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

RuleTable parse_rule(long long n) {
  if (n < 0 || n > 255) throw InvalidRule(n);
  RuleTable rule;
  rule.number = static_cast<std::uint8_t>(n);
  for (unsigned v = 0; v < 8; ++v) rule.outputs[v] = ((n >> v) & 1) != 0;
  return rule;
}

BitRow BitRow::single(std::int64_t position) {
  BitRow row;
  row.offset_ = position;
  row.length_ = 1;
  row.words_ = {1};
  return row;
}

BitRow BitRow::from_positions(std::span<const std::int64_t> black) {
  if (black.empty()) return {};
  const auto [lo, hi] = std::minmax_element(black.begin(), black.end());
  const std::size_t length = static_cast<std::size_t>(*hi - *lo) + 1;
  std::vector<std::uint64_t> words(words_for(length), 0);
  for (const std::int64_t p : black) {
    const auto i = static_cast<std::size_t>(p - *lo);
    words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  return from_words(*lo, length, std::move(words));
}

BitRow BitRow::from_cells(std::int64_t offset, std::span<const std::uint8_t> cells) {
  std::vector<std::uint64_t> words(words_for(cells.size()), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i]) words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  return from_words(offset, cells.size(), std::move(words));
}

BitRow BitRow::from_words(std::int64_t offset, std::size_t length,
                          std::vector<std::uint64_t> words) {
  BitRow row;
  row.offset_ = offset;
  row.length_ = length;
  row.words_ = std::move(words);
  row.words_.resize(words_for(length), 0);
  row.canonicalize();
  return row;
}

void BitRow::canonicalize() {
  std::size_t lo_word = 0;
  while (lo_word < words_.size() && words_[lo_word] == 0) ++lo_word;
  if (lo_word == words_.size()) {
    *this = BitRow{};
    return;
  }
  std::size_t hi_word = words_.size() - 1;
  while (words_[hi_word] == 0) --hi_word;

  const std::size_t first = lo_word * kWordBits + std::countr_zero(words_[lo_word]);
  const std::size_t last =
      hi_word * kWordBits + (kWordBits - 1 - std::countl_zero(words_[hi_word]));
  const std::size_t new_length = last - first + 1;

  if (first != 0) {
    const std::size_t word_shift = first / kWordBits;
    const unsigned bit_shift = first % kWordBits;
    const std::size_t n = words_for(new_length);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t src = i + word_shift;
      std::uint64_t w = words_[src] >> bit_shift;
      if (bit_shift != 0 && src + 1 < words_.size()) w |= words_[src + 1] << (kWordBits - bit_shift);
      words_[i] = w;
    }
  }
  words_.resize(words_for(new_length));
  const unsigned tail = new_length % kWordBits;
  if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  offset_ += static_cast<std::int64_t>(first);
  length_ = new_length;
}

bool BitRow::get(std::int64_t position) const noexcept {
  if (position < offset_) return false;
  const auto i = static_cast<std::uint64_t>(position - offset_);
  if (i >= length_) return false;
  return ((words_[i / kWordBits] >> (i % kWordBits)) & 1) != 0;
}

std::size_t BitRow::population() const noexcept {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::int64_t> BitRow::positions() const {
  std::vector<std::int64_t> out;
  out.reserve(population());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(offset_ + static_cast<std::int64_t>(wi * kWordBits + std::countr_zero(w)));
    }
  }
  return out;
}

std::string BitRow::render(std::int64_t from, std::size_t width) const {
  std::string s(width, '.');
  for (std::size_t i = 0; i < width; ++i) {
    if (get(from + static_cast<std::int64_t>(i))) s[i] = '#';
  }
  return s;
}

BitRow step_row(const RuleTable& rule, const BitRow& row) {
  if (!rule.quiescent()) throw UnsupportedBackground(rule.number);
  if (row.empty()) return {};

  // Output cell q sits at coordinate offset - 1 + q; its left, centre and
  // right neighbours are input bits q - 2, q - 1 and q.
  const auto in = row.words();
  const std::size_t in_words = in.size();
  const std::size_t out_length = row.length() + 2;
  const std::size_t out_words = words_for(out_length);
  std::vector<std::uint64_t> out(out_words, 0);

  std::array<std::uint64_t, 8> mask{};
  for (unsigned v = 0; v < 8; ++v) mask[v] = rule.outputs[v] ? ~std::uint64_t{0} : 0;

  const auto n = static_cast<std::ptrdiff_t>(out_words);
#pragma omp parallel for schedule(static) if (out_words > kParallelWords)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const std::uint64_t cur = ju < in_words ? in[ju] : 0;
    const std::uint64_t prev = (ju > 0 && ju - 1 < in_words) ? in[ju - 1] : 0;
    const std::uint64_t l = (cur << 2) | (prev >> 62);
    const std::uint64_t c = (cur << 1) | (prev >> 63);
    const std::uint64_t r = cur;
    const std::uint64_t nl = ~l, nc = ~c, nr = ~r;
    out[ju] = (nl & nc & r & mask[1]) | (nl & c & nr & mask[2]) | (nl & c & r & mask[3]) |
              (l & nc & nr & mask[4]) | (l & nc & r & mask[5]) | (l & c & nr & mask[6]) |
              (l & c & r & mask[7]);
  }
  return BitRow::from_words(row.offset() - 1, out_length, std::move(out));
}

BitRow step_row_naive(const RuleTable& rule, const BitRow& row) {
  if (!rule.quiescent()) throw UnsupportedBackground(rule.number);
  if (row.empty()) return {};
  const std::int64_t from = row.first() - 1;
  const std::int64_t to = row.last() + 1;
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t p = from; p <= to; ++p) {
    const int v = 4 * row.get(p - 1) + 2 * row.get(p) + row.get(p + 1);
    cells.push_back(rule.outputs[static_cast<std::size_t>(v)] ? 1 : 0);
  }
  return BitRow::from_cells(from, cells);
}

std::pair<std::int64_t, std::int64_t> EcaHistory::extent() const {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& r : rows) {
    if (r.empty()) continue;
    lo = std::min(lo, r.first());
    hi = std::max(hi, r.last());
  }
  if (lo > hi) return {0, -1};
  return {lo, hi};
}

EcaHistory evolve(const RuleTable& rule, const BitRow& seed, std::size_t t, std::size_t row_limit) {
  if (t >= row_limit) throw HistoryLimitExceeded(t + 1, row_limit);
  EcaHistory history{rule, {}};
  history.rows.reserve(t + 1);
  history.rows.push_back(seed);
  for (std::size_t i = 0; i < t; ++i) history.rows.push_back(step_row(rule, history.rows.back()));
  return history;
}

std::vector<std::uint8_t> center_column(const RuleTable& rule, std::size_t t) {
  std::vector<std::uint8_t> bits;
  bits.reserve(t + 1);
  BitRow row = BitRow::single(0);
  bits.push_back(1);
  for (std::size_t i = 0; i < t; ++i) {
    row = step_row(rule, row);
    bits.push_back(row.get(0) ? 1 : 0);
  }
  return bits;
}

std::string history_text(const EcaHistory& history, std::int64_t from, std::size_t width) {
  std::string out;
  out.reserve(history.rows.size() * (width + 1));
  for (const auto& row : history.rows) {
    out += row.render(from, width);
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> step_cyclic(const RuleTable& rule, std::span<const std::uint8_t> cells) {
  const std::size_t n = cells.size();
  std::vector<std::uint8_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int l = cells[(i + n - 1) % n] ? 1 : 0;
    const int c = cells[i] ? 1 : 0;
    const int r = cells[(i + 1) % n] ? 1 : 0;
    out[i] = rule.outputs[static_cast<std::size_t>(4 * l + 2 * c + r)] ? 1 : 0;
  }
  return out;
}

}  // namespace emergelab::eca
