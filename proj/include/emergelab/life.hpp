#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "emergelab/grid.hpp"

namespace emergelab::life {

// B3/S23 on the unbounded plane. Only cells adjacent to live cells are
// candidates; neighbour counts go into an open-addressed tally.
CellSet step(const CellSet& cells);
CellSet run(const CellSet& cells, std::size_t generations);

inline std::size_t population(const CellSet& cells) noexcept { return cells.size(); }

enum class Verdict { Extinct, StillLife, Oscillator, Translator, Unknown };

std::string_view to_string(Verdict v) noexcept;

// Outcome of a bounded recurrence search. `generation` is the first generation
// at which the verdict holds; for Unknown it is the exhausted budget.
struct FateReport {
  Verdict verdict = Verdict::Unknown;
  std::size_t generation = 0;
  std::size_t period = 0;
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  friend bool operator==(const FateReport&, const FateReport&) = default;
};

// Exact classification by recurrence of the state, or of its canonical form
// (translator), within `budget` generations. Never guesses.
FateReport detect_fate(const CellSet& cells, std::size_t budget);

// Groups cells whose Chebyshev distance is at most `gap` (gap 1 = 8-connected).
std::vector<CellSet> clusters(const CellSet& cells, std::int64_t gap = 1);

// ---- pattern files ----

// Extended RLE header `x = W, y = H[, rule = B3/S23]`, runs of b/o, `$`, `!`.
// Throws RleParseError with line/column, or UnsupportedRule.
CellSet parse_rle(std::string_view text);

// Canonical RLE (bounding-box corner moved to the origin), lines at most 69
// characters, runs never split across lines, `!` terminated.
std::string write_rle(const CellSet& cells);

// Plaintext `.cells`: `!` comment lines, '.' dead, 'O' live.
CellSet parse_cells(std::string_view text);

}  // namespace emergelab::life
