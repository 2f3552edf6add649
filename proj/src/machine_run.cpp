#include <algorithm>
#include <sstream>

#include "emergelab/eturing.hpp"

namespace emergelab::eturing {

namespace {

// Two-way unbounded tape, blank 0.
class Tape {
 public:
  Symbol read() const noexcept {
    const std::int64_t i = head_ + origin_;
    if (i < 0 || i >= static_cast<std::int64_t>(cells_.size())) return Symbol::Zero;
    return cells_[static_cast<std::size_t>(i)];
  }

  void write(Symbol s) {
    if (s == Symbol::Zero && read() == Symbol::Zero) return;
    std::int64_t i = head_ + origin_;
    if (i < 0) {
      const auto grow = static_cast<std::size_t>(-i) + cells_.size() + 8;
      cells_.insert(cells_.begin(), grow, Symbol::Zero);
      origin_ += static_cast<std::int64_t>(grow);
      i += static_cast<std::int64_t>(grow);
    } else if (i >= static_cast<std::int64_t>(cells_.size())) {
      cells_.resize(static_cast<std::size_t>(i) + cells_.size() + 8, Symbol::Zero);
    }
    cells_[static_cast<std::size_t>(i)] = s;
  }

  void move(Move m) noexcept {
    if (m == Move::Left) --head_;
    if (m == Move::Right) ++head_;
  }

  void place(std::int64_t cell, Symbol s) {
    const std::int64_t saved = head_;
    head_ = cell;
    write(s);
    head_ = saved;
  }

 private:
  std::vector<Symbol> cells_;
  std::int64_t origin_ = 0;  // index of cell 0 in cells_
  std::int64_t head_ = 0;
};

std::string describe(const std::vector<Symbol>& reads) {
  std::string s;
  for (const Symbol r : reads) s += to_char(r);
  return s;
}

}  // namespace

std::vector<std::uint64_t> EnumTrace::values() const {
  std::vector<std::uint64_t> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.value);
  return v;
}

BudgetExceeded::BudgetExceeded(std::uint64_t budget, EnumTrace partial, std::string phase)
    : Error((phase.empty() ? std::string("run") : phase + " phase") + ": step budget of " +
            std::to_string(budget) + " exhausted before halting"),
      budget_(budget),
      partial_(std::move(partial)),
      phase_(std::move(phase)) {}

StuckState::StuckState(std::string state, std::string reads, std::uint64_t step, EnumTrace partial,
                       std::string phase)
    : Error((phase.empty() ? std::string("run") : phase + " phase") + ": no transition from state '" + state +
            "' reading " + reads + " at step " + std::to_string(step)),
      state_(std::move(state)),
      reads_(std::move(reads)),
      step_(step),
      partial_(std::move(partial)),
      phase_(std::move(phase)) {}

std::string to_binary(std::uint64_t n) {
  if (n == 0) return "0";
  std::string s;
  for (; n != 0; n >>= 1) s.insert(s.begin(), static_cast<char>('0' + (n & 1)));
  return s;
}

EnumTrace run_on_input(const MachineSpec& machine, std::string_view input_bits, std::uint64_t step_budget) {
  const std::size_t k = machine.tapes();
  std::vector<Tape> tapes(k);
  tapes[0].place(-1, Symbol::Hash);
  for (std::size_t i = 0; i < input_bits.size(); ++i) {
    const char c = input_bits[i];
    tapes[0].place(static_cast<std::int64_t>(i), c == '1' ? Symbol::One : c == '#' ? Symbol::Hash : Symbol::Zero);
  }
  tapes[0].place(static_cast<std::int64_t>(input_bits.size()), Symbol::Hash);

  EnumTrace trace;
  std::string block;
  std::uint32_t state = machine.start();
  std::vector<Symbol> reads(k);
  while (state != machine.halt()) {
    if (trace.total_steps >= step_budget) throw BudgetExceeded(step_budget, std::move(trace));
    std::size_t code = 0;
    for (std::size_t i = 0; i < k; ++i) {
      reads[i] = tapes[i].read();
      code = code * 3 + static_cast<std::size_t>(reads[i]);
    }
    const Transition* t = machine.lookup(state, code);
    if (t == nullptr) {
      throw StuckState(machine.state_name(state), describe(reads), trace.total_steps, std::move(trace));
    }
    for (std::size_t i = 0; i < k; ++i) {
      tapes[i].write(t->write[i]);
      tapes[i].move(t->move[i]);
    }
    ++trace.total_steps;
    switch (t->out) {
      case Output::None:
        break;
      case Output::Zero:
      case Output::One:
        block += t->out == Output::One ? '1' : '0';
        break;
      case Output::Hash: {
        if (block.empty()) throw MalformedOutput(trace.total_steps, "empty output block ('##')");
        if (block.size() > 64 && block.find('1') < block.size() - 64) {
          throw MalformedOutput(trace.total_steps, "output block wider than 64 bits");
        }
        std::uint64_t value = 0;
        for (const char c : block) value = (value << 1) | static_cast<std::uint64_t>(c == '1');
        trace.entries.push_back({value, std::move(block), trace.total_steps});
        block.clear();
        break;
      }
    }
    state = t->next;
  }
  trace.halted = true;
  return trace;
}

EnumTrace run(const MachineSpec& machine, std::uint64_t input_n, std::uint64_t step_budget) {
  return run_on_input(machine, to_binary(input_n), step_budget);
}

bool verify_enum(const EnumTrace& trace, const std::vector<std::uint64_t>& reference) {
  if (!trace.halted || trace.entries.size() != reference.size()) return false;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (trace.entries[i].value != reference[i]) return false;
    if (i > 0 && trace.entries[i].step <= trace.entries[i - 1].step) return false;
  }
  return true;
}

std::string format_trace(const EnumTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    out << (i + 1) << ' ' << trace.entries[i].value << ' ' << trace.entries[i].step << '\n';
  }
  return out.str();
}

namespace {

template <typename F>
EnumTrace run_phase(const std::string& phase, F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(e.budget(), e.partial(), phase);
  } catch (const StuckState& e) {
    throw StuckState(e.state(), e.reads(), e.step(), e.partial(), phase);
  }
}

}  // namespace

ComposeResult compose(const MachineSpec& approx, const MachineSpec& finisher, std::uint64_t input_n,
                      std::uint64_t step_budget) {
  const EnumTrace first = run_phase("approx", [&] { return run(approx, input_n, step_budget); });
  if (first.entries.empty()) throw MissingIntermediate(input_n);
  ComposeResult result;
  result.intermediate = first.entries.back().bits;
  result.approx_steps = first.total_steps;

  const EnumTrace second =
      run_phase("finisher", [&] { return run_on_input(finisher, result.intermediate, step_budget); });
  if (second.entries.empty()) throw NoFinisherOutput();
  result.value = second.entries.back().value;
  result.finisher_steps = second.total_steps;
  return result;
}

ApproxReport check_p_approximation(const MachineSpec& approx, const MachineSpec& finisher,
                                   const std::vector<std::uint64_t>& reference_values,
                                   const std::vector<std::uint64_t>& reference_timing,
                                   const BigOWitness& witness, IndexRange range, std::uint64_t step_budget,
                                   std::string timing_source) {
  if (witness.c.num <= 0 || witness.c.den <= 0 || witness.n0 == 0) {
    throw Error("check_p_approximation: witness needs c > 0 and n0 > 0");
  }
  ApproxReport report;
  report.witness = witness;
  report.reference_timing = reference_timing;
  report.timing_source = std::move(timing_source);

  const std::uint64_t first = std::max(range.first, witness.n0);
  if (first > range.last) {
    report.vacuous = true;
    return report;
  }
  if (range.first == 0) throw Error("check_p_approximation: indices start at 1");
  if (range.last > reference_values.size() || range.last > reference_timing.size()) {
    throw Error("check_p_approximation: index " + std::to_string(range.last) +
                " is beyond the reference tables");
  }

  const EnumTrace trace = run_phase("approx", [&] { return run(approx, range.last, step_budget); });
  report.approx_steps = trace.total_steps;

  const auto c_num = static_cast<std::uint64_t>(witness.c.num);
  const auto c_den = static_cast<std::uint64_t>(witness.c.den);
  for (std::uint64_t i = first; i <= range.last; ++i) {
    if (trace.entries.size() < i) throw MissingIntermediate(i);
    ApproxRecord rec;
    rec.index = i;
    rec.intermediate = trace.entries[i - 1].bits;
    rec.reference_time = reference_timing[i - 1];
    const EnumTrace fin =
        run_phase("finisher", [&] { return run_on_input(finisher, rec.intermediate, step_budget); });
    if (fin.entries.empty()) throw NoFinisherOutput();
    rec.value = fin.entries.back().value;
    if (rec.value != reference_values[i - 1]) throw WrongFinisherOutput(i, rec.value, reference_values[i - 1]);
    rec.finisher_steps = fin.total_steps;
    rec.bound = static_cast<double>(c_num) * static_cast<double>(rec.reference_time) /
                (static_cast<double>(c_den) * static_cast<double>(i));
    // steps <= (num / den) * T / i, compared exactly in integers.
    rec.pass = static_cast<unsigned __int128>(rec.finisher_steps) * c_den * i <=
               static_cast<unsigned __int128>(c_num) * rec.reference_time;
    report.verdict = report.verdict && rec.pass;
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> measure_reference(
    const MachineSpec& machine, std::uint64_t last, std::uint64_t step_budget) {
  std::vector<std::uint64_t> values, timing;
  for (std::uint64_t i = 1; i <= last; ++i) {
    const EnumTrace t = run(machine, i, step_budget);
    if (t.entries.empty()) throw MissingIntermediate(i);
    values.push_back(t.entries.back().value);
    timing.push_back(t.total_steps);
  }
  return {std::move(values), std::move(timing)};
}

}  // namespace emergelab::eturing
