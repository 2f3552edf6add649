#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace emergelab::eca {

// Wolfram-numbered rule for a two-colour, radius-1 automaton. outputs[v] is the
// next colour of a cell whose neighbourhood (l, c, r) reads as v = 4l + 2c + r.
struct RuleTable {
  std::uint8_t number = 0;
  std::array<bool, 8> outputs{};

  bool quiescent() const noexcept { return !outputs[0]; }
  friend bool operator==(const RuleTable&, const RuleTable&) = default;
};

// Throws InvalidRule unless 0 <= n <= 255.
RuleTable parse_rule(long long n);

// One generation of a 1-D automaton on an all-white unbounded background.
// Cells are packed LSB-first, 64 per word: cell (offset + i) is bit i % 64 of
// words[i / 64]. Always canonical: the first and last stored cells are black,
// or the row is empty (length 0, offset 0).
class BitRow {
 public:
  BitRow() = default;

  static BitRow single(std::int64_t position = 0);
  static BitRow from_positions(std::span<const std::int64_t> black);
  // cells[i] != 0 marks coordinate offset + i black.
  static BitRow from_cells(std::int64_t offset, std::span<const std::uint8_t> cells);
  // Takes ownership of raw packed words; bits at or beyond `length` must be 0.
  static BitRow from_words(std::int64_t offset, std::size_t length,
                           std::vector<std::uint64_t> words);

  bool empty() const noexcept { return length_ == 0; }
  std::int64_t offset() const noexcept { return offset_; }
  std::size_t length() const noexcept { return length_; }
  // Coordinates of the first and last black cell; meaningless when empty().
  std::int64_t first() const noexcept { return offset_; }
  std::int64_t last() const noexcept { return offset_ + static_cast<std::int64_t>(length_) - 1; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool get(std::int64_t position) const noexcept;
  std::size_t population() const noexcept;
  std::vector<std::int64_t> positions() const;

  // '#' for black, '.' for white over [from, from + width).
  std::string render(std::int64_t from, std::size_t width) const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  void canonicalize();

  std::int64_t offset_ = 0;
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit-packed kernel: a full word of next-generation cells per iteration,
// OpenMP-parallel over words once the row is wide enough.
// Throws UnsupportedBackground for rules with outputs[0] == 1.
BitRow step_row(const RuleTable& rule, const BitRow& row);

// Per-cell reference kernel; kept as the oracle for step_row.
BitRow step_row_naive(const RuleTable& rule, const BitRow& row);

struct EcaHistory {
  RuleTable rule;
  std::vector<BitRow> rows;  // rows[t] is generation t

  // Smallest and largest black coordinate over all rows; {0, -1} when all rows are empty.
  std::pair<std::int64_t, std::int64_t> extent() const;
};

inline constexpr std::size_t kDefaultHistoryLimit = 10'000;

// History of t + 1 rows starting at `seed`. Throws HistoryLimitExceeded when
// t + 1 > row_limit.
EcaHistory evolve(const RuleTable& rule, const BitRow& seed, std::size_t t,
                  std::size_t row_limit = kDefaultHistoryLimit);

// Cell 0 of generations 0..t from a single black cell at 0.
std::vector<std::uint8_t> center_column(const RuleTable& rule, std::size_t t);

// Text export: one line per generation, '.' and '#', over [from, from + width).
std::string history_text(const EcaHistory& history, std::int64_t from, std::size_t width);

// Fixed-width cyclic mode; accepts every rule, including background-flipping ones.
std::vector<std::uint8_t> step_cyclic(const RuleTable& rule, std::span<const std::uint8_t> cells);

}  // namespace emergelab::eca
