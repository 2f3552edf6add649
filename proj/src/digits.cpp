#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "emergelab/candidates.hpp"
#include "emergelab/error.hpp"

namespace emergelab::candidates {

std::vector<std::uint8_t> sqrt_digits(long long m, std::size_t count) {
  if (m < 2) throw InvalidRadicand(m);
  const mpz_class radicand(static_cast<signed long>(m));
  if (mpz_perfect_square_p(radicand.get_mpz_t()) != 0) throw RationalSqrt(m);

  mpz_class scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), 10, 2 * count);
  scaled *= radicand;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());

  const std::string text = root.get_str(10);
  // root = floor(sqrt(m)) * 10^count + fraction digits, so the last `count`
  // characters are the fraction.
  std::vector<std::uint8_t> digits;
  digits.reserve(count);
  for (std::size_t i = text.size() - count; i < text.size(); ++i) {
    digits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return digits;
}

DigitStream DigitStream::sqrt(long long m, std::size_t max_digits) {
  DigitStream s;
  s.radicand_ = m;
  s.max_digits_ = max_digits;
  sqrt_digits(m, 0);  // validates m
  return s;
}

DigitStream DigitStream::from_text(std::string_view text) {
  DigitStream s;
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(std::string("digit file: unexpected character '") + c + "'");
    }
    s.digits_ += c;
  }
  s.max_digits_ = s.digits_.size();
  return s;
}

DigitStream DigitStream::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("digit file: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void DigitStream::ensure(std::size_t n) {
  if (n <= digits_.size()) return;
  if (n > max_digits_) {
    throw InsufficientDigits("needs " + std::to_string(n) + " digits, the stream holds " +
                             std::to_string(max_digits_));
  }
  const std::size_t want = std::min(max_digits_, std::max(n, 2 * digits_.size() + 64));
  const auto digits = sqrt_digits(radicand_, want);
  digits_.clear();
  for (const auto d : digits) digits_ += static_cast<char>('0' + d);
}

std::string DigitStream::take(std::size_t n) {
  ensure(cursor_ + n);
  std::string out = digits_.substr(cursor_, n);
  cursor_ += n;
  return out;
}

std::vector<std::string> digit_chain_blocks(DigitStream& stream, std::size_t n) {
  std::vector<std::string> blocks;
  std::size_t length = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    blocks.push_back(stream.take(length));
    const mpz_class value(blocks.back(), 10);
    if (value == 0) throw ChainDegenerate(k);
    if (k == n) break;
    if (!value.fits_ulong_p()) {
      throw InsufficientDigits("f(" + std::to_string(k) + ") = " + value.get_str() +
                               " is longer than any digit stream");
    }
    length = value.get_ui();
  }
  return blocks;
}

std::vector<mpz_class> digit_chain(DigitStream& stream, std::size_t n) {
  std::vector<mpz_class> values;
  for (const auto& b : digit_chain_blocks(stream, n)) values.emplace_back(b, 10);
  return values;
}

}  // namespace emergelab::candidates
