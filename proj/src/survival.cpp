#include <bit>

#include "emergelab/candidates.hpp"
#include "emergelab/life.hpp"

namespace emergelab::candidates {

CellSet config(std::uint64_t j) {
  const auto bits = static_cast<std::uint64_t>(std::bit_width(j));
  std::uint64_t side = 0;
  while (side * side < bits) ++side;
  std::vector<Cell> cells;
  for (std::uint64_t i = 0; i < bits; ++i) {
    if ((j >> (bits - 1 - i)) & 1) {
      cells.push_back({static_cast<std::int64_t>(i % side), static_cast<std::int64_t>(i / side)});
    }
  }
  return CellSet(std::move(cells));
}

namespace {

bool survives(std::uint64_t j, std::uint64_t n, const LifeEngine& engine) {
  const CellSet start = config(j);
  const CellSet end = engine ? engine(start, n) : life::run(start, n);
  return !end.empty();
}

}  // namespace

std::uint64_t life_survival_count(std::uint64_t n, const LifeEngine& engine) {
  const auto last = static_cast<std::int64_t>(n);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
  for (std::int64_t j = 1; j <= last; ++j) {
    if (survives(static_cast<std::uint64_t>(j), n, engine)) ++count;
  }
  return count;
}

std::uint64_t life_survival_count_serial(std::uint64_t n, const LifeEngine& engine) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (survives(j, n, engine)) ++count;
  }
  return count;
}

}  // namespace emergelab::candidates
