#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emergelab/error.hpp"

namespace emergelab::eturing {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Hash = 2 };
enum class Move : std::uint8_t { Left, Right, Stay };
enum class Output : std::uint8_t { None, Zero, One, Hash };

char to_char(Symbol s) noexcept;

struct Transition {
  std::uint32_t next = 0;
  std::vector<Symbol> write;
  std::vector<Move> move;
  Output out = Output::None;
};

// A validated machine over {0, 1, #} with k >= 2 work tapes and a write-only
// output tape. There is no way to express a read of the output tape.
class MachineSpec {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t tapes() const noexcept { return tapes_; }
  std::uint32_t start() const noexcept { return start_; }
  std::uint32_t halt() const noexcept { return halt_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const std::string& state_name(std::uint32_t id) const { return states_.at(id); }
  std::size_t transition_count() const noexcept { return transition_count_; }

  // nullptr when no transition applies.
  const Transition* lookup(std::uint32_t state, std::size_t read_code) const noexcept;

  // Base-3 code of a tuple of read symbols, tape 1 most significant.
  static std::size_t encode(const std::vector<Symbol>& reads) noexcept;

 private:
  friend MachineSpec parse_machine(std::string_view text);

  std::string name_;
  std::size_t tapes_ = 0;
  std::uint32_t start_ = 0;
  std::uint32_t halt_ = 0;
  std::vector<std::string> states_;
  std::size_t combos_ = 0;  // 3^tapes
  std::vector<std::optional<Transition>> table_;
  std::size_t transition_count_ = 0;
};

// Line-oriented DSL:
//   name <id> / tapes <k> / start <state> / halt <state>
//   <state> <s1>..<sk> -> <state'> <w1>..<wk> <m1>..<mk> <out>
// with s, w in {0,1,#}, m in {L,R,S}, out in {-,0,1,#}. A line is a comment
// when it starts with '#' followed by a space (or nothing).
MachineSpec parse_machine(std::string_view text);
MachineSpec load_machine(const std::filesystem::path& path);

struct TraceEntry {
  std::uint64_t value = 0;   // the block read as binary, MSB first
  std::string bits;          // the block as written
  std::uint64_t step = 0;    // steps executed when the closing '#' was written

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// What a machine wrote on its output tape, one entry per '#'-terminated block.
struct EnumTrace {
  std::vector<TraceEntry> entries;
  std::uint64_t total_steps = 0;
  bool halted = false;

  std::vector<std::uint64_t> values() const;
  friend bool operator==(const EnumTrace&, const EnumTrace&) = default;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, EnumTrace partial, std::string phase = {});
  const EnumTrace& partial() const noexcept { return partial_; }
  const std::string& phase() const noexcept { return phase_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
  EnumTrace partial_;
  std::string phase_;
};

class StuckState : public Error {
 public:
  StuckState(std::string state, std::string reads, std::uint64_t step, EnumTrace partial,
             std::string phase = {});
  const std::string& state() const noexcept { return state_; }
  const std::string& reads() const noexcept { return reads_; }
  std::uint64_t step() const noexcept { return step_; }
  const EnumTrace& partial() const noexcept { return partial_; }
  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string state_;
  std::string reads_;
  std::uint64_t step_;
  EnumTrace partial_;
  std::string phase_;
};

// An empty block ("##") or a block too wide for a 64-bit value.
class MalformedOutput : public Error {
 public:
  MalformedOutput(std::uint64_t step, const std::string& what)
      : Error("run: step " + std::to_string(step) + ": " + what) {}
};

class NoFinisherOutput : public Error {
 public:
  NoFinisherOutput() : Error("compose: finisher halted without writing a '#'-terminated block") {}
};

class WrongFinisherOutput : public Error {
 public:
  WrongFinisherOutput(std::uint64_t i, std::uint64_t got, std::uint64_t want)
      : Error("check_p_approximation: finisher on r_" + std::to_string(i) + " returned " +
              std::to_string(got) + ", expected f(" + std::to_string(i) + ") = " + std::to_string(want)),
        index_(i) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

class MissingIntermediate : public Error {
 public:
  explicit MissingIntermediate(std::uint64_t i)
      : Error("check_p_approximation: approximating machine wrote no block r_" + std::to_string(i)),
        index_(i) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

// Binary MSB-first, no leading zeros; n >= 1.
std::string to_binary(std::uint64_t n);

// Work tape 1 holds '#' <input> '#' with the first input symbol at cell 0;
// every other cell of every tape is 0 and all heads start at cell 0. One
// transition is one step. Throws BudgetExceeded, StuckState, MalformedOutput.
EnumTrace run_on_input(const MachineSpec& machine, std::string_view input_bits, std::uint64_t step_budget);
EnumTrace run(const MachineSpec& machine, std::uint64_t input_n, std::uint64_t step_budget);

// Halted, values equal `reference` in order, step counts strictly increasing.
bool verify_enum(const EnumTrace& trace, const std::vector<std::uint64_t>& reference);

// Trace export: "<index> <value> <step_count>" per entry, index from 1.
std::string format_trace(const EnumTrace& trace);

struct ComposeResult {
  std::uint64_t value = 0;         // the finisher's last block
  std::string intermediate;        // r_n, the approximating machine's last block
  std::uint64_t approx_steps = 0;
  std::uint64_t finisher_steps = 0;

  std::uint64_t total_steps() const noexcept { return approx_steps + finisher_steps; }
};

// Computes f(n) through an approximation: run `approx` on n, take its last
// block r_n, and feed it to `finisher`. Errors carry phase "approx" or "finisher".
ComposeResult compose(const MachineSpec& approx, const MachineSpec& finisher, std::uint64_t input_n,
                      std::uint64_t step_budget);

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

// Constants of an O(.) bound: |k(n)| <= c |p(n)| for n >= n0.
struct BigOWitness {
  Rational c;
  std::uint64_t n0 = 1;
};

struct ApproxRecord {
  std::uint64_t index = 0;
  std::string intermediate;  // r_i
  std::uint64_t value = 0;   // finisher output on r_i
  std::uint64_t finisher_steps = 0;
  std::uint64_t reference_time = 0;  // T(i)
  double bound = 0;                  // c * T(i) / i
  bool pass = false;
};

struct ApproxReport {
  std::vector<ApproxRecord> records;
  bool verdict = true;
  bool vacuous = false;
  std::uint64_t approx_steps = 0;
  BigOWitness witness;
  std::vector<std::uint64_t> reference_timing;
  std::string timing_source;  // provenance of T; the efficient machine itself is never available
};

struct IndexRange {
  std::uint64_t first = 1;
  std::uint64_t last = 0;  // inclusive; first > last is empty
};

// Empirical audit, at finitely many indices, that `approx` with `finisher`
// meets the P-approximation time bound finisher_steps <= c * T(i) / i.
// reference_values[i - 1] = f(i), reference_timing[i - 1] = T(i).
ApproxReport check_p_approximation(const MachineSpec& approx, const MachineSpec& finisher,
                                   const std::vector<std::uint64_t>& reference_values,
                                   const std::vector<std::uint64_t>& reference_timing,
                                   const BigOWitness& witness, IndexRange range,
                                   std::uint64_t step_budget, std::string timing_source = "user-supplied");

// f(i) and T(i) for i in 1..last, read off full runs of an E-Turing machine:
// f(i) is its last block and T(i) its total steps on input i.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> measure_reference(
    const MachineSpec& machine, std::uint64_t last, std::uint64_t step_budget);

}  // namespace emergelab::eturing
