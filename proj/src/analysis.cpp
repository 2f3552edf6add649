#include "emergelab/analysis.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <string>

#include "emergelab/error.hpp"

namespace emergelab::analysis {

Fraction ones_fraction(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw EmptyInput("ones_fraction");
  std::uint64_t ones = 0;
  for (const auto b : bits) ones += b != 0;
  return {ones, bits.size()};
}

double block_entropy(std::span<const std::uint8_t> bits, std::size_t k) {
  if (k == 0) throw Error("block_entropy: block size must be at least 1");
  if (k > bits.size()) throw BlockTooLarge(k, bits.size());
  if (k > 32) throw Error("block_entropy: block size above 32 is not supported");

  const std::size_t windows = bits.size() - k + 1;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse;
  std::vector<std::uint64_t> dense;
  const bool use_dense = k <= 20;
  if (use_dense) dense.assign(std::size_t{1} << k, 0);

  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    code = ((code << 1) | (bits[i] != 0)) & mask;
    if (i + 1 < k) continue;
    if (use_dense) {
      ++dense[code];
    } else {
      ++sparse[code];
    }
  }

  double h = 0;
  auto add = [&](std::uint64_t count) {
    if (count == 0) return;
    const double p = static_cast<double>(count) / static_cast<double>(windows);
    h -= p * std::log2(p);
  };
  if (use_dense) {
    for (const auto c : dense) add(c);
  } else {
    for (const auto& [_, c] : sparse) add(c);
  }
  return h;
}

namespace {

void check_period_args(std::size_t length, std::size_t max_period) {
  if (length <= 2 * max_period) {
    throw Error("no_short_period: length " + std::to_string(length) + " must exceed 2 * max_period = " +
                std::to_string(2 * max_period));
  }
}

}  // namespace

bool no_short_period_serial(std::span<const std::uint8_t> bits, std::size_t max_period) {
  check_period_args(bits.size(), max_period);
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool periodic = true;
    for (std::size_t t = 0; periodic && t + p < bits.size(); ++t) periodic = (bits[t] != 0) == (bits[t + p] != 0);
    if (periodic) return false;
  }
  return true;
}

bool no_short_period(std::span<const std::uint8_t> bits, std::size_t max_period) {
  check_period_args(bits.size(), max_period);
  const std::size_t n = bits.size();
  // One spare word so a read at word + 1 never leaves the buffer.
  std::vector<std::uint64_t> packed(n / 64 + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i]) packed[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  auto word_at = [&](std::size_t pos) {
    const std::size_t w = pos / 64;
    const unsigned s = pos % 64;
    return s == 0 ? packed[w] : (packed[w] >> s) | (packed[w + 1] << (64 - s));
  };

  std::atomic<bool> periodic_found{false};
  const auto last = static_cast<std::ptrdiff_t>(max_period);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t pi = 1; pi <= last; ++pi) {
    if (periodic_found.load(std::memory_order_relaxed)) continue;
    const auto p = static_cast<std::size_t>(pi);
    const std::size_t span = n - p;  // number of (t, t + p) pairs
    bool periodic = true;
    for (std::size_t t = 0; periodic && t < span; t += 64) {
      std::uint64_t diff = word_at(t) ^ word_at(t + p);
      const std::size_t left = span - t;
      if (left < 64) diff &= (std::uint64_t{1} << left) - 1;
      periodic = diff == 0;
    }
    if (periodic) periodic_found.store(true, std::memory_order_relaxed);
  }
  return !periodic_found.load();
}

}  // namespace emergelab::analysis
