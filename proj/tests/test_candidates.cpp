#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <set>

#include "emergelab/candidates.hpp"
#include "emergelab/error.hpp"
#include "emergelab/life.hpp"
#include "oracles.hpp"

using namespace emergelab;
using namespace emergelab::candidates;

namespace {

std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(EMERGELAB_FIXTURE_DIR) / name; }

std::vector<std::string> as_strings(const std::vector<mpz_class>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

using Digits = std::vector<std::uint8_t>;

}  // namespace

TEST_CASE("sqrt_digits examples") {
  CHECK(sqrt_digits(2, 5) == Digits{4, 1, 4, 2, 1});
  CHECK(sqrt_digits(3, 5) == Digits{7, 3, 2, 0, 5});
  CHECK(sqrt_digits(2, 0).empty());
  CHECK(sqrt_digits(99, 3) == Digits{9, 4, 9});
  CHECK_THROWS_AS(sqrt_digits(9, 4), RationalSqrt);
  CHECK_THROWS_AS(sqrt_digits(4, 1), RationalSqrt);
  CHECK_THROWS_AS(sqrt_digits(1, 3), InvalidRadicand);
  CHECK_THROWS_AS(sqrt_digits(-7, 3), InvalidRadicand);
}

TEST_CASE("sqrt_digits agrees with a long-hand bracket") {
  for (long long m = 2; m <= 60; ++m) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= m) ++r;
    if (r * r == m) continue;
    CAPTURE(m);
    CHECK(oracle::sqrt_digits_bracket(m, sqrt_digits(m, 300)));
  }
  CHECK(oracle::sqrt_digits_bracket(1'000'000'007LL, sqrt_digits(1'000'000'007LL, 500)));
}

TEST_CASE("shorter digit runs are prefixes of longer ones") {
  const Digits long_run = sqrt_digits(7, 400);
  for (const std::size_t a : {0, 1, 17, 64, 65, 399}) {
    const Digits s = sqrt_digits(7, a);
    CHECK(std::equal(s.begin(), s.end(), long_run.begin()));
  }
}

TEST_CASE("digit streams") {
  DigitStream s = DigitStream::sqrt(2);
  CHECK(s.take(5) == "41421");
  CHECK(s.cursor() == 5);
  CHECK(s.take(3) == "356");
  // lazily extended well past the first chunk
  DigitStream t = DigitStream::sqrt(2);
  t.take(5000);
  std::string expect;
  for (const auto d : sqrt_digits(2, 5010)) expect += static_cast<char>('0' + d);
  CHECK(t.take(10) == expect.substr(5000));

  DigitStream f = DigitStream::from_text("1 4\n15 9");
  CHECK(f.take(4) == "1415");
  CHECK(f.take(1) == "9");
  CHECK_THROWS_AS(f.take(1), InsufficientDigits);
  CHECK_THROWS_AS(DigitStream::from_text("12a"), Error);
  DigitStream capped = DigitStream::sqrt(2, 10);
  CHECK_THROWS_AS(capped.take(11), InsufficientDigits);
  CHECK_THROWS_AS(DigitStream::sqrt(16), RationalSqrt);
}

TEST_CASE("digit_chain examples") {
  DigitStream r2 = DigitStream::sqrt(2);
  CHECK(as_strings(digit_chain(r2, 2)) == std::vector<std::string>{"4", "1421"});

  DigitStream pi = DigitStream::from_file(fixture("pi_digits.txt"));
  CHECK(as_strings(digit_chain(pi, 3)) == std::vector<std::string>{"1", "4", "1592"});

  DigitStream zeros = DigitStream::from_file(fixture("degenerate_digits.txt"));
  try {
    digit_chain(zeros, 3);
    FAIL("expected ChainDegenerate");
  } catch (const ChainDegenerate& e) {
    CHECK(e.index() == 2);
  }
  DigitStream zero_first = DigitStream::from_text("0123");
  CHECK_THROWS_AS(digit_chain(zero_first, 1), ChainDegenerate);

  DigitStream short_pi = DigitStream::from_text("14159");
  CHECK_THROWS_AS(digit_chain(short_pi, 3), InsufficientDigits);
}

TEST_CASE("digit_chain keeps leading zeros in the block") {
  // f(1) = 4, block "0042" -> 42, then 42 digits
  DigitStream s = DigitStream::from_text("40042" + std::string(42, '7'));
  const auto blocks = digit_chain_blocks(s, 3);
  CHECK(blocks == std::vector<std::string>{"4", "0042", std::string(42, '7')});
  DigitStream again = DigitStream::from_text("40042" + std::string(42, '7'));
  const auto values = digit_chain(again, 2);
  CHECK(values[1] == 42);
}

TEST_CASE("digit_chain block structure") {
  // sqrt(5) = 2.2360679...: blocks "2", "36", then 36 digits
  DigitStream s = DigitStream::sqrt(5);
  const auto blocks = digit_chain_blocks(s, 3);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[1] == "36");
  std::string joined;
  for (const auto& b : blocks) joined += b;
  std::string prefix;
  for (const auto d : sqrt_digits(5, joined.size())) prefix += static_cast<char>('0' + d);
  CHECK(joined == prefix);
  CHECK(s.cursor() == joined.size());
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    CHECK(blocks[k].size() == std::stoull(blocks[k - 1]));
  }
}

TEST_CASE("enumerate_words examples") {
  CHECK(enumerate_words(1) == "");
  CHECK(enumerate_words(2) == "0");
  CHECK(enumerate_words(3) == "1");
  CHECK(enumerate_words(8) == "000");
  CHECK_THROWS_AS(enumerate_words(0), InvalidIndex);
  const WordNumbering skip{false};
  CHECK(enumerate_words(1, skip) == "0");
  CHECK(enumerate_words(3, skip) == "00");
  CHECK(word_index("", {}) == 1);
  CHECK(word_index("000", {}) == 8);
}

TEST_CASE("word numbering is a bijection") {
  std::set<std::string> seen;
  std::string prev;
  for (std::uint64_t i = 1; i <= 10'000; ++i) {
    const std::string w = enumerate_words(i);
    CHECK(word_index(w) == i);
    if (i > 1) CHECK((w.size() > prev.size() || (w.size() == prev.size() && w > prev)));
    seen.insert(w);
    prev = w;
  }
  CHECK(seen.size() == 10'000);
  for (std::uint64_t i = 1; i <= 2000; ++i) CHECK(word_index(enumerate_words(i, {false}), {false}) == i);
}

TEST_CASE("DFA files") {
  const LanguageSpec even = load_dfa(fixture("even_ones.dfa"));
  CHECK(even.states == 2);
  CHECK(even.accepts(""));
  CHECK(even.accepts("0"));
  CHECK_FALSE(even.accepts("1"));
  CHECK(even.accepts("0110"));
  CHECK_THROWS_AS(parse_dfa("states 2\nstart 0\naccept 0\ntrans 0 0 0\n"), Error);
  CHECK_THROWS_AS(parse_dfa("states 1\nstart 0\naccept 0\ntrans 0 0 0\ntrans 0 1 3\n"), Error);
  CHECK_THROWS_AS(parse_dfa("start 0\n"), Error);
}

TEST_CASE("language_count examples") {
  const LanguageSpec even = load_dfa(fixture("even_ones.dfa"));
  CHECK(language_count(even, 1) == 0);
  CHECK(language_count(even, 4) == 2);
  const LanguageSpec all = load_dfa(fixture("all_words.dfa"));
  for (std::uint64_t n = 1; n <= 100; ++n) CHECK(language_count(all, n) == n - 1);
}

TEST_CASE("language_count matches brute force") {
  const LanguageSpec even = load_dfa(fixture("even_ones.dfa"));
  // multiples of three in binary, MSB first
  const LanguageSpec mod3 = parse_dfa(
      "states 3\nstart 0\naccept 0\ntrans 0 0 0\ntrans 0 1 1\ntrans 1 0 2\ntrans 1 1 0\ntrans 2 0 1\ntrans 2 1 2\n");
  for (const auto* lang : {&even, &mod3}) {
    for (const bool eps : {true, false}) {
      std::uint64_t prev = 0;
      for (std::uint64_t n = 1; n <= 1000; ++n) {
        const std::uint64_t c = language_count(*lang, n, {eps});
        CHECK(c == oracle::count_accepted(*lang, n, eps));
        CHECK(c - prev <= 1);
        CHECK(c >= prev);
        prev = c;
      }
    }
  }
  // Indices below 2^L cover every word shorter than L; half of each nonempty
  // length has an even number of ones, plus the empty word.
  CHECK(language_count(even, std::uint64_t{1} << 40) == std::uint64_t{1} << 39);
}

TEST_CASE("config numbering") {
  CHECK(config(1) == CellSet{{0, 0}});
  CHECK(config(2) == CellSet{{0, 0}});
  CHECK(config(3) == CellSet{{0, 0}, {1, 0}});
  CHECK(config(15) == CellSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  for (std::uint64_t j = 1; j <= 500; ++j) CHECK(oracle::points(config(j)) == oracle::config_points(j));
}

TEST_CASE("survival count examples") {
  CHECK(life_survival_count(0) == 0);
  CHECK(life_survival_count(3) == 0);
  CHECK(life_survival_count(15) >= 1);
  CHECK(life_survival_count(15) == 5);
}

TEST_CASE("survival count matches the dense oracle up to 64") {
  const auto expect = oracle::survival_counts(64);
  for (std::uint64_t n = 0; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(life_survival_count(n) == expect[n]);
    CHECK(life_survival_count_serial(n) == expect[n]);
  }
}

TEST_CASE("survival count accepts another engine") {
  std::atomic<int> calls{0};
  const LifeEngine counting = [&](const CellSet& s, std::size_t n) {
    ++calls;
    return life::run(s, n);
  };
  CHECK(life_survival_count(20, counting) == life_survival_count(20));
  CHECK(calls == 20);
  const LifeEngine dense = [](const CellSet& s, std::size_t n) {
    return oracle::cellset(oracle::life_dense(oracle::points(s), n));
  };
  CHECK(life_survival_count_serial(30, dense) == life_survival_count(30));
}
