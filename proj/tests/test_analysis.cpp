#include <doctest.h>

#include <random>

#include "emergelab/analysis.hpp"
#include "emergelab/eca.hpp"
#include "emergelab/error.hpp"
#include "emergelab/life.hpp"
#include "oracles.hpp"

using namespace emergelab;
using namespace emergelab::analysis;

namespace {

using Bits = std::vector<std::uint8_t>;

Bits alternating(std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = i % 2;
  return b;
}

Bits complement(Bits b) {
  for (auto& x : b) x = !x;
  return b;
}

CycleResult cycle_of(const std::vector<int>& v) { return find_cycle<int>(std::span<const int>(v)); }

}  // namespace

TEST_CASE("find_cycle examples") {
  CHECK(cycle_of({7, 7, 7, 7}) == CycleResult{0, 1, true});
  CHECK(cycle_of({1, 2, 3, 2, 3}) == CycleResult{1, 2, true});
  CHECK_FALSE(cycle_of({1, 2, 3}).found);
  CHECK_FALSE(cycle_of({}).found);
}

TEST_CASE("find_cycle on canonical blinker states") {
  std::vector<CellSet> states;
  CellSet s{{0, -1}, {0, 0}, {0, 1}};
  for (int t = 0; t < 6; ++t) {
    states.push_back(s.canonical());
    s = life::step(s);
  }
  const auto r = find_cycle<CellSet, CellSetHash>(std::span<const CellSet>(states));
  CHECK(r == CycleResult{0, 2, true});
}

TEST_CASE("find_cycle matches the quadratic search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = rng() % 501;
    const int alphabet = 1 + static_cast<int>(rng() % 600);
    std::vector<int> v(len);
    for (auto& x : v) x = static_cast<int>(rng() % static_cast<std::uint64_t>(alphabet));
    CHECK(cycle_of(v) == oracle::cycle_quadratic(v));
  }
}

TEST_CASE("Brent's search agrees with the map-based search") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t m = 1 + rng() % 400;
    const std::uint64_t a = rng() % m, c = rng() % m, x0 = rng() % m;
    auto f = [&](std::uint64_t x) { return (a * x * x + c) % m; };
    std::vector<std::uint64_t> seq{x0};
    while (seq.size() < 2 * m + 2) seq.push_back(f(seq.back()));
    const auto want = find_cycle<std::uint64_t>(std::span<const std::uint64_t>(seq));
    REQUIRE(want.found);
    CHECK(find_cycle_brent(x0, f, 4 * m + 4) == want);
  }
  CHECK_FALSE(find_cycle_brent(0, [](int x) { return x + 1; }, 1000).found);
}

TEST_CASE("ones_fraction") {
  CHECK(ones_fraction(Bits(10, 0)).num == 0);
  const Fraction half = ones_fraction(Bits{0, 1, 0, 1});
  CHECK(half.num == 2);
  CHECK(half.den == 4);
  CHECK(half.value() == 0.5);
  CHECK_THROWS_AS(ones_fraction(Bits{}), EmptyInput);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Bits b(1 + rng() % 300);
    for (auto& x : b) x = rng() & 1;
    const double f = ones_fraction(b).value();
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f == doctest::Approx(1.0 - ones_fraction(complement(b)).value()));
  }
}

TEST_CASE("block_entropy") {
  CHECK(block_entropy(Bits(50, 0), 3) == 0.0);
  CHECK(block_entropy(alternating(100), 1) == doctest::Approx(1.0));
  // two length-2 windows out of three on "011": 01 and 11 -> 1 bit
  CHECK(block_entropy(Bits{0, 1, 1}, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(block_entropy(Bits{0, 1}, 3), BlockTooLarge);
  CHECK_THROWS_AS(block_entropy(Bits{0, 1}, 0), Error);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    Bits b(100 + rng() % 400);
    for (auto& x : b) x = rng() & 1;
    for (const std::size_t k : {1, 4, 8, 24}) {
      const double h = block_entropy(b, k);
      CHECK(h >= 0.0);
      CHECK(h <= static_cast<double>(k) + 1e-9);
      CHECK(h == doctest::Approx(block_entropy(complement(b), k)));
    }
  }
}

TEST_CASE("no_short_period") {
  CHECK_FALSE(no_short_period(alternating(100), 2));
  CHECK(no_short_period(Bits{0, 0, 1, 0}, 1));
  CHECK_FALSE(no_short_period(Bits(9, 1), 4));
  CHECK_THROWS_AS(no_short_period(Bits{0, 1, 0, 1}, 2), Error);

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = 1 + rng() % 150;
    Bits unit(p);
    for (auto& x : unit) x = rng() & 1;
    Bits b;
    const std::size_t len = 2 * 160 + 1 + rng() % 300;
    for (std::size_t i = 0; i < len; ++i) b.push_back(unit[i % p]);
    if (rng() % 2) b[rng() % b.size()] ^= 1;
    CHECK(no_short_period(b, 160) == no_short_period_serial(b, 160));
  }
}

TEST_CASE("rule 30 centre column statistics") {
  const Bits col = eca::center_column(eca::parse_rule(30), (1u << 14) - 1);
  REQUIRE(col.size() == 1u << 14);
  const Fraction f = ones_fraction(col);
  CHECK(f.num == 8277);
  CHECK(std::abs(f.value() - 0.5) <= 0.02);
  const double h = block_entropy(col, 8);
  CHECK(h == doctest::Approx(7.986745479).epsilon(1e-9));
  CHECK(h >= 7.8);
  CHECK(no_short_period(col, 2048));
  CHECK(no_short_period_serial(col, 2048));
}
