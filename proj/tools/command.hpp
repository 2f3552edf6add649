#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace emergelab::cli {

struct EcaOptions {
  int rule = 0;
  std::uint64_t steps = 0;
  std::vector<std::int64_t> seed{0};
  std::string out;   // PBM path
  std::string text;  // text export path, "-" for stdout
  std::uint64_t cyclic_width = 0;
  std::uint64_t row_limit = 10'000;
};

struct LifeOptions {
  std::string rle;
  std::string cells;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> budget;
  std::vector<std::string> print;  // bbox, population, rle
  std::string out;                 // PBM path
  std::string rle_out;
};

struct AntOptions {
  std::optional<std::uint64_t> steps;
  std::string heading = "N";
  bool detect_highway = false;
  std::int64_t window = 16;
  std::uint64_t confirmations = 5;
  std::string out;  // PBM path; the ant marker goes to <out>.txt
};

struct TmOptions {
  std::string machine;
  std::string approx;
  std::string finisher;
  std::string reference_machine;
  std::string values_file;
  std::string timing_file;
  std::uint64_t input = 1;
  std::optional<std::uint64_t> budget;
  std::uint64_t from = 1;
  std::uint64_t to = 0;
  std::int64_t c_num = 8;
  std::int64_t c_den = 1;
  std::uint64_t n0 = 1;
};

struct CandidateOptions {
  long long m = 2;
  std::uint64_t count = 10;
  std::optional<long long> sqrt_of;
  std::string digits_file;
  std::uint64_t n = 1;
  std::uint64_t index = 1;
  std::string dfa;
  bool skip_epsilon = false;
  bool serial = false;
};

struct AnalyzeOptions {
  int rule = 30;
  std::uint64_t bits = 1 << 14;
  std::uint64_t k = 8;
  std::uint64_t max_period = 2048;
};

// One validated invocation: `subcommand` is eca, life, ant, tm, candidate or
// analyze; `action` names the nested verb where there is one.
struct Command {
  std::string subcommand;
  std::string action;
  bool json = false;
  EcaOptions eca;
  LifeOptions life;
  AntOptions ant;
  TmOptions tm;
  CandidateOptions candidate;
  AnalyzeOptions analyze;
};

// Usage problems never reach run_command: they come back as exit code 2 (0
// for --help) with the text to print.
struct ParseResult {
  std::optional<Command> command;
  int exit_code = 0;
  std::string message;
};

ParseResult parse_args(const std::vector<std::string>& args);

// 0 on success, 1 on a domain error (one line on `err`).
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

// Full entry point: parse, then run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using FieldValue = std::variant<bool, std::int64_t, std::uint64_t, double, std::string>;
using Report = std::vector<std::pair<std::string, FieldValue>>;

// `key=value` lines, or one JSON object with the keys in the same order.
void emit_report(const Report& report, bool json, std::ostream& out);

}  // namespace emergelab::cli
