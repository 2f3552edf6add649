#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "emergelab/grid.hpp"

namespace emergelab::ant {

// N = (0, +1), E = (+1, 0); a left turn is counterclockwise.
enum class Heading : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

Heading turn_right(Heading h) noexcept;
Heading turn_left(Heading h) noexcept;
Cell delta(Heading h) noexcept;
char to_char(Heading h) noexcept;
std::optional<Heading> parse_heading(std::string_view s) noexcept;

using BlackSet = std::unordered_set<Cell, CellHash>;

struct AntState {
  Cell pos;
  Heading heading = Heading::N;
  BlackSet black;
  std::uint64_t steps = 0;

  friend bool operator==(const AntState&, const AntState&) = default;
};

// Ant at the origin facing `heading` on an all-white plane.
AntState standard_start(Heading heading = Heading::N);

// Standard: black -> turn right, white -> turn left. Mirrored swaps the two,
// which is the rule seen through a reflection of the plane.
enum class Chirality { Standard, Mirrored };

void advance(AntState& state, Chirality chirality = Chirality::Standard);
// Undoes one advance() of the same chirality.
void retreat(AntState& state, Chirality chirality = Chirality::Standard);

AntState step(const AntState& state);
AntState run(const AntState& state, std::uint64_t n);

struct HighwayReport {
  bool found = false;
  std::uint64_t onset = 0;
  std::uint64_t period = 0;
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  std::int64_t window_radius = 0;
  std::uint64_t confirmations = 0;
  std::uint64_t steps_simulated = 0;

  friend bool operator==(const HighwayReport&, const HighwayReport&) = default;
};

// Fingerprints every step by (heading, black cells within Chebyshev distance
// window_radius, relative to the ant). A recurrence at t1 < t2 with nonzero
// displacement proposes p = t2 - t1; it is accepted only if the fingerprint and
// displacement repeat for `confirmations` further multiples of p within the
// budget. Reports the earliest onset and, for it, the smallest period.
HighwayReport detect_highway(const AntState& start, std::uint64_t max_steps,
                             std::int64_t window_radius = 16, std::uint64_t confirmations = 5);

// Independent replay on the sparse state: true iff the window fingerprint at
// onset + k * period equals the one at onset, shifted by k * (dx, dy), for
// k = 1..periods.
bool replay_highway(const AntState& start, const HighwayReport& report, std::uint64_t periods);

// Flat key=value fields in a stable order.
std::vector<std::pair<std::string, std::string>> report_fields(const HighwayReport& report);

}  // namespace emergelab::ant
