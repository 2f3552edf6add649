#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace emergelab::analysis {

// states[preperiod + t] == states[preperiod + period + t] wherever both exist.
struct CycleResult {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  bool found = false;

  friend bool operator==(const CycleResult&, const CycleResult&) = default;
};

// First repeated fingerprint, via a fingerprint -> first-index map. For a
// sequence produced by a deterministic map this is the minimal (mu, lambda).
template <typename T, typename Hash = std::hash<T>>
CycleResult find_cycle(std::span<const T> states) {
  std::unordered_map<T, std::size_t, Hash> first;
  first.reserve(states.size());
  for (std::size_t j = 0; j < states.size(); ++j) {
    auto [it, inserted] = first.try_emplace(states[j], j);
    if (!inserted) return {it->second, j - it->second, true};
  }
  return {};
}

// Brent's search over x0, f(x0), f(f(x0)), ... in constant memory, looking at
// no more than `max_steps` applications of f. Agrees with find_cycle on the
// materialized sequence whenever the cycle closes within that horizon.
template <typename T, typename F>
CycleResult find_cycle_brent(const T& x0, F&& f, std::size_t max_steps) {
  std::size_t power = 1, lambda = 1, used = 1;
  if (max_steps == 0) return {};
  T tortoise = x0;
  T hare = f(x0);
  while (!(tortoise == hare)) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    if (++used > max_steps) return {};
    hare = f(hare);
    ++lambda;
  }
  tortoise = x0;
  hare = x0;
  for (std::size_t i = 0; i < lambda; ++i) hare = f(hare);
  std::size_t mu = 0;
  while (!(tortoise == hare)) {
    tortoise = f(tortoise);
    hare = f(hare);
    ++mu;
  }
  return {mu, lambda, true};
}

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

// (#ones) / length, unreduced. Throws EmptyInput.
Fraction ones_fraction(std::span<const std::uint8_t> bits);

// Shannon entropy, in bits, of the sliding length-k windows. Throws
// BlockTooLarge when k exceeds the length.
double block_entropy(std::span<const std::uint8_t> bits, std::size_t k);

// True iff no p in 1..max_period has bits[t] == bits[t + p] for all t.
// Periods are checked in parallel on a bit-packed copy.
bool no_short_period(std::span<const std::uint8_t> bits, std::size_t max_period);
bool no_short_period_serial(std::span<const std::uint8_t> bits, std::size_t max_period);

}  // namespace emergelab::analysis
