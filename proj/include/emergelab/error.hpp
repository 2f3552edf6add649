#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace emergelab {

// Base of every domain error. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- eca ----
class InvalidRule : public Error {
 public:
  explicit InvalidRule(long long n)
      : Error("parse_rule: rule number " + std::to_string(n) + " is outside 0..255") {}
};

class UnsupportedBackground : public Error {
 public:
  explicit UnsupportedBackground(int rule)
      : Error("step_row: rule " + std::to_string(rule) +
              " maps 000 to 1, which flips the quiescent background; use the cyclic mode") {}
};

class HistoryLimitExceeded : public Error {
 public:
  HistoryLimitExceeded(std::size_t rows, std::size_t limit)
      : Error("evolve: " + std::to_string(rows) + " rows requested, history limit is " +
              std::to_string(limit)) {}
};

// ---- life ----
class RleParseError : public Error {
 public:
  RleParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse_rle: line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnsupportedRule : public Error {
 public:
  explicit UnsupportedRule(const std::string& rule)
      : Error("parse_rle: rule '" + rule + "' is not B3/S23") {}
};

// ---- eturing ----
class MachineParseError : public Error {
 public:
  MachineParseError(std::size_t line, const std::string& what)
      : Error("parse_machine: line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class TooFewTapes : public MachineParseError {
 public:
  TooFewTapes(std::size_t line, long long k)
      : MachineParseError(line, "machine declares " + std::to_string(k) +
                                    " work tapes, at least 2 are required") {}
};

// ---- candidates ----
class RationalSqrt : public Error {
 public:
  explicit RationalSqrt(long long m)
      : Error("sqrt_digits: " + std::to_string(m) + " is a perfect square") {}
};

class InvalidRadicand : public Error {
 public:
  explicit InvalidRadicand(long long m)
      : Error("sqrt_digits: radicand " + std::to_string(m) + " must be at least 2") {}
};

class ChainDegenerate : public Error {
 public:
  explicit ChainDegenerate(std::size_t k)
      : Error("digit_chain: f(" + std::to_string(k) +
              ") is 0, so the following block would be empty"),
        index_(k) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InsufficientDigits : public Error {
 public:
  explicit InsufficientDigits(const std::string& what) : Error("digit_chain: " + what) {}
};

class InvalidIndex : public Error {
 public:
  explicit InvalidIndex(long long i)
      : Error("enumerate_words: index " + std::to_string(i) + " must be at least 1") {}
};

// ---- analysis ----
class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& op) : Error(op + ": empty input") {}
};

class BlockTooLarge : public Error {
 public:
  BlockTooLarge(std::size_t k, std::size_t length)
      : Error("block_entropy: block size " + std::to_string(k) + " exceeds input length " +
              std::to_string(length)) {}
};

// ---- cli ----
class EmptyImage : public Error {
 public:
  EmptyImage() : Error("render_pbm: image width and height must be at least 1") {}
};

}  // namespace emergelab
