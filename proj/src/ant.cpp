#include "emergelab/ant.hpp"

namespace emergelab::ant {

Heading turn_right(Heading h) noexcept {
  return static_cast<Heading>((static_cast<int>(h) + 1) & 3);
}

Heading turn_left(Heading h) noexcept {
  return static_cast<Heading>((static_cast<int>(h) + 3) & 3);
}

Cell delta(Heading h) noexcept {
  switch (h) {
    case Heading::N: return {0, 1};
    case Heading::E: return {1, 0};
    case Heading::S: return {0, -1};
    case Heading::W: return {-1, 0};
  }
  return {0, 0};
}

char to_char(Heading h) noexcept { return "NESW"[static_cast<int>(h)]; }

std::optional<Heading> parse_heading(std::string_view s) noexcept {
  if (s == "N") return Heading::N;
  if (s == "E") return Heading::E;
  if (s == "S") return Heading::S;
  if (s == "W") return Heading::W;
  return std::nullopt;
}

AntState standard_start(Heading heading) {
  AntState s;
  s.heading = heading;
  return s;
}

void advance(AntState& state, Chirality chirality) {
  const bool mirrored = chirality == Chirality::Mirrored;
  if (state.black.erase(state.pos) != 0) {
    state.heading = mirrored ? turn_left(state.heading) : turn_right(state.heading);
  } else {
    state.black.insert(state.pos);
    state.heading = mirrored ? turn_right(state.heading) : turn_left(state.heading);
  }
  const Cell d = delta(state.heading);
  state.pos = {state.pos.x + d.x, state.pos.y + d.y};
  ++state.steps;
}

void retreat(AntState& state, Chirality chirality) {
  const bool mirrored = chirality == Chirality::Mirrored;
  const Cell d = delta(state.heading);
  state.pos = {state.pos.x - d.x, state.pos.y - d.y};
  if (state.black.erase(state.pos) != 0) {
    // The square was white before the move and the ant turned left.
    state.heading = mirrored ? turn_left(state.heading) : turn_right(state.heading);
  } else {
    state.black.insert(state.pos);
    state.heading = mirrored ? turn_right(state.heading) : turn_left(state.heading);
  }
  --state.steps;
}

AntState step(const AntState& state) {
  AntState next = state;
  advance(next);
  return next;
}

AntState run(const AntState& state, std::uint64_t n) {
  AntState s = state;
  for (std::uint64_t i = 0; i < n; ++i) advance(s);
  return s;
}

std::vector<std::pair<std::string, std::string>> report_fields(const HighwayReport& r) {
  return {
      {"found", r.found ? "true" : "false"},
      {"onset", std::to_string(r.onset)},
      {"period", std::to_string(r.period)},
      {"dx", std::to_string(r.dx)},
      {"dy", std::to_string(r.dy)},
      {"window_radius", std::to_string(r.window_radius)},
      {"confirmations", std::to_string(r.confirmations)},
      {"steps_simulated", std::to_string(r.steps_simulated)},
  };
}

}  // namespace emergelab::ant
