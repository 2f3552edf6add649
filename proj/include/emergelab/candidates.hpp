#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "emergelab/grid.hpp"

namespace emergelab::candidates {

// First `count` decimal digits of sqrt(m) after the point, exact:
// the digits of isqrt(m * 10^(2 count)) with the integer part dropped.
// Throws InvalidRadicand (m < 2) or RationalSqrt (perfect square).
std::vector<std::uint8_t> sqrt_digits(long long m, std::size_t count);

// Decimal digits of an irrational number after the point, read in order.
// Digit 1 is the first digit after the decimal point.
class DigitStream {
 public:
  // Digits of sqrt(m), extended on demand up to `max_digits`.
  static DigitStream sqrt(long long m, std::size_t max_digits = 1'000'000);
  // ASCII digits; whitespace is ignored.
  static DigitStream from_text(std::string_view text);
  static DigitStream from_file(const std::filesystem::path& path);

  std::size_t cursor() const noexcept { return cursor_; }
  // Consumes the next `n` digits. Throws InsufficientDigits past the end.
  std::string take(std::size_t n);

 private:
  void ensure(std::size_t n);

  long long radicand_ = 0;  // 0 for a fixed digit file
  std::size_t max_digits_ = 0;
  std::string digits_;
  std::size_t cursor_ = 0;
};

// f(1) is the first digit; f(k) is the integer written by the next f(k-1)
// digits (leading zeros count toward the length). Returns f(1)..f(n).
// Throws ChainDegenerate(k) when some f(k) is 0 and InsufficientDigits when
// the stream runs out.
std::vector<mpz_class> digit_chain(DigitStream& stream, std::size_t n);
// The digit blocks behind digit_chain, in order.
std::vector<std::string> digit_chain_blocks(DigitStream& stream, std::size_t n);

// Length-lexicographic numbering of {0,1}*. With epsilon included, w_1 is the
// empty word, w_2 = "0", w_3 = "1", w_4 = "00", ...; otherwise w_1 = "0".
struct WordNumbering {
  bool include_epsilon = true;
};

// Throws InvalidIndex for i < 1.
std::string enumerate_words(std::uint64_t i, WordNumbering numbering = {});
std::uint64_t word_index(std::string_view word, WordNumbering numbering = {});

// Complete DFA over {0,1}.
struct LanguageSpec {
  std::size_t states = 0;
  std::size_t start = 0;
  std::vector<bool> accepting;
  std::vector<std::array<std::size_t, 2>> next;

  bool accepts(std::string_view word) const;
};

// `states <n>`, `start <id>`, `accept <ids...>`, `trans <id> <0|1> <id>`.
// Throws Error when a transition is missing or out of range.
LanguageSpec parse_dfa(std::string_view text);
LanguageSpec load_dfa(const std::filesystem::path& path);

// |{ i : 1 <= i < n, w_i in L }|, counted per word length by dynamic
// programming rather than by enumeration.
std::uint64_t language_count(const LanguageSpec& lang, std::uint64_t n, WordNumbering numbering = {});

// Index j >= 1 written in binary MSB-first as b_0..b_{L-1} on a W x W square,
// W = ceil(sqrt(L)): b_i sets the cell at row i / W, column i % W.
CellSet config(std::uint64_t j);

using LifeEngine = std::function<CellSet(const CellSet&, std::size_t)>;

// Number of j in 1..n whose config is nonempty after exactly n generations.
// Indices are independent and spread over OpenMP threads.
std::uint64_t life_survival_count(std::uint64_t n, const LifeEngine& engine = {});
// Same count, one index after another.
std::uint64_t life_survival_count_serial(std::uint64_t n, const LifeEngine& engine = {});

}  // namespace emergelab::candidates
