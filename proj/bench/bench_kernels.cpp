// Wall-clock comparison of the parallel kernels against their serial references.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "emergelab/analysis.hpp"
#include "emergelab/candidates.hpp"
#include "emergelab/eca.hpp"
#include "emergelab/life.hpp"

using namespace emergelab;

namespace {

template <class F>
double seconds(F&& f, int reps = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel, const char* unit = "s") {
  std::printf("%-34s serial %10.4f %s  parallel %10.4f %s  ratio %5.2f\n", name, serial, unit, parallel, unit,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(7);

  std::vector<std::uint8_t> cells(1 << 20);
  for (auto& c : cells) c = rng() & 1;
  const auto wide = eca::BitRow::from_cells(0, cells);
  const auto rule = eca::parse_rule(30);
  const double naive = seconds([&] { eca::step_row_naive(rule, wide); }, 3);
  const double packed = seconds([&] { eca::step_row(rule, wide); }, 20);
  row("ECA step, 2^20 cells (naive/packed)", naive, packed);
  std::printf("%-34s %.3e cell updates/s\n", "  packed throughput", static_cast<double>(cells.size()) / packed);

  const auto col = eca::center_column(rule, (1u << 14) - 1);
  row("no_short_period, 16384 bits", seconds([&] { analysis::no_short_period_serial(col, 2048); }),
      seconds([&] { analysis::no_short_period(col, 2048); }));

  row("life_survival_count(64)", seconds([&] { candidates::life_survival_count_serial(64); }),
      seconds([&] { candidates::life_survival_count(64); }));

  std::vector<Cell> live;
  for (int y = 0; y < 200; ++y) {
    for (int x = 0; x < 200; ++x) {
      if (rng() % 4 == 0) live.push_back({x, y});
    }
  }
  CellSet soup(std::move(live));
  const std::size_t start = soup.size();
  const double per_gen = seconds([&] { soup = life::step(soup); }, 100);
  std::printf("%-34s %.3f ms/generation (%zu cells at start, %zu after 100)\n", "Life soup step", per_gen * 1e3,
              start, soup.size());

  // The same density in 100 small soups spread far apart.
  std::vector<Cell> spread;
  for (int k = 0; k < 100; ++k) {
    const std::int64_t ox = (k % 10) * 100000, oy = (k / 10) * 100000;
    for (int y = 0; y < 20; ++y) {
      for (int x = 0; x < 20; ++x) {
        if (rng() % 4 == 0) spread.push_back({ox + x, oy + y});
      }
    }
  }
  CellSet scattered(std::move(spread));
  const std::size_t scattered_start = scattered.size();
  const double scattered_gen = seconds([&] { scattered = life::step(scattered); }, 100);
  std::printf("%-34s %.3f ms/generation (%zu cells at start)\n", "Life scattered step", scattered_gen * 1e3,
              scattered_start);
  return 0;
}
