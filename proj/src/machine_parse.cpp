#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "emergelab/eturing.hpp"

namespace emergelab::eturing {

namespace {

// 3^12 read combinations per state is already half a million table slots.
constexpr std::size_t kMaxTapes = 12;

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::optional<Symbol> parse_symbol(std::string_view t) {
  if (t == "0") return Symbol::Zero;
  if (t == "1") return Symbol::One;
  if (t == "#") return Symbol::Hash;
  return std::nullopt;
}

std::optional<Move> parse_move(std::string_view t) {
  if (t == "L") return Move::Left;
  if (t == "R") return Move::Right;
  if (t == "S") return Move::Stay;
  return std::nullopt;
}

std::optional<Output> parse_output(std::string_view t) {
  if (t == "-") return Output::None;
  if (t == "0") return Output::Zero;
  if (t == "1") return Output::One;
  if (t == "#") return Output::Hash;
  return std::nullopt;
}

struct RawTransition {
  std::size_t line;
  std::string from;
  std::vector<Symbol> reads;
  std::string to;
  Transition t;
};

}  // namespace

char to_char(Symbol s) noexcept { return "01#"[static_cast<int>(s)]; }

std::size_t MachineSpec::encode(const std::vector<Symbol>& reads) noexcept {
  std::size_t code = 0;
  for (const Symbol s : reads) code = code * 3 + static_cast<std::size_t>(s);
  return code;
}

const Transition* MachineSpec::lookup(std::uint32_t state, std::size_t read_code) const noexcept {
  const std::size_t slot = state * combos_ + read_code;
  if (slot >= table_.size() || !table_[slot]) return nullptr;
  return &*table_[slot];
}

MachineSpec parse_machine(std::string_view text) {
  std::optional<std::string> name, start, halt;
  std::optional<std::size_t> tapes;
  std::vector<RawTransition> raw;

  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.size() >= 1 && line[0] == '#' && (line.size() == 1 || line[1] == ' ')) continue;

    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    // State names may collide with header keywords; an arrow marks a transition.
    const bool transition = std::find(tok.begin(), tok.end(), "->") != tok.end();
    auto header = [&](std::optional<std::string>& slot) {
      if (tok.size() != 2) throw MachineParseError(line_no, "'" + std::string(tok[0]) + "' takes one argument");
      if (slot) throw MachineParseError(line_no, "duplicate '" + std::string(tok[0]) + "' line");
      slot = std::string(tok[1]);
    };
    if (!transition && tok[0] == "name") {
      header(name);
      continue;
    }
    if (!transition && tok[0] == "start") {
      header(start);
      continue;
    }
    if (!transition && tok[0] == "halt") {
      header(halt);
      continue;
    }
    if (!transition && tok[0] == "tapes") {
      if (tok.size() != 2) throw MachineParseError(line_no, "'tapes' takes one argument");
      if (tapes) throw MachineParseError(line_no, "duplicate 'tapes' line");
      long long k = 0;
      const auto [p, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), k);
      if (ec != std::errc{} || p != tok[1].data() + tok[1].size()) {
        throw MachineParseError(line_no, "bad tape count '" + std::string(tok[1]) + "'");
      }
      if (k < 2) throw TooFewTapes(line_no, k);
      if (static_cast<unsigned long long>(k) > kMaxTapes) {
        throw MachineParseError(line_no, "at most " + std::to_string(kMaxTapes) + " work tapes are supported");
      }
      tapes = static_cast<std::size_t>(k);
      continue;
    }

    if (!tapes) throw MachineParseError(line_no, "transition before the 'tapes' line");
    const std::size_t k = *tapes;
    if (tok.size() != 3 * k + 4 || tok[k + 1] != "->") {
      throw MachineParseError(line_no, "expected '<state> <" + std::to_string(k) + " symbols> -> <state> <" +
                                           std::to_string(k) + " symbols> <" + std::to_string(k) +
                                           " moves> <out>'");
    }
    RawTransition rt;
    rt.line = line_no;
    rt.from = std::string(tok[0]);
    rt.to = std::string(tok[k + 2]);
    for (std::size_t i = 0; i < k; ++i) {
      const auto r = parse_symbol(tok[1 + i]);
      const auto w = parse_symbol(tok[k + 3 + i]);
      const auto m = parse_move(tok[2 * k + 3 + i]);
      if (!r) throw MachineParseError(line_no, "unknown symbol '" + std::string(tok[1 + i]) + "'");
      if (!w) throw MachineParseError(line_no, "unknown symbol '" + std::string(tok[k + 3 + i]) + "'");
      if (!m) throw MachineParseError(line_no, "unknown move '" + std::string(tok[2 * k + 3 + i]) + "'");
      rt.reads.push_back(*r);
      rt.t.write.push_back(*w);
      rt.t.move.push_back(*m);
    }
    const auto out = parse_output(tok[3 * k + 3]);
    if (!out) throw MachineParseError(line_no, "unknown output action '" + std::string(tok[3 * k + 3]) + "'");
    rt.t.out = *out;
    raw.push_back(std::move(rt));
  }

  if (!tapes) throw MachineParseError(line_no, "missing 'tapes' line");
  if (!start) throw MachineParseError(line_no, "missing 'start' line");
  if (!halt) throw MachineParseError(line_no, "missing 'halt' line");

  MachineSpec spec;
  spec.name_ = name.value_or("unnamed");
  spec.tapes_ = *tapes;
  spec.combos_ = 1;
  for (std::size_t i = 0; i < spec.tapes_; ++i) spec.combos_ *= 3;

  std::map<std::string, std::uint32_t> ids;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<std::uint32_t>(spec.states_.size()));
    if (inserted) spec.states_.push_back(s);
    return it->second;
  };
  spec.start_ = intern(*start);
  spec.halt_ = intern(*halt);
  for (const auto& rt : raw) {
    if (rt.from == *halt) throw MachineParseError(rt.line, "transition out of the halt state '" + rt.from + "'");
    intern(rt.from);
  }
  for (const auto& rt : raw) {
    if (!ids.contains(rt.to)) throw MachineParseError(rt.line, "unknown state '" + rt.to + "'");
  }

  spec.table_.resize(spec.states_.size() * spec.combos_);
  for (auto& rt : raw) {
    const std::size_t slot = ids.at(rt.from) * spec.combos_ + MachineSpec::encode(rt.reads);
    if (spec.table_[slot]) {
      throw MachineParseError(rt.line, "duplicate transition for state '" + rt.from + "'");
    }
    rt.t.next = ids.at(rt.to);
    spec.table_[slot] = std::move(rt.t);
    ++spec.transition_count_;
  }
  return spec;
}

MachineSpec load_machine(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_machine: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_machine(ss.str());
}

}  // namespace emergelab::eturing
