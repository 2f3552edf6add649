#include <bit>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "emergelab/candidates.hpp"
#include "emergelab/error.hpp"

namespace emergelab::candidates {

std::string enumerate_words(std::uint64_t i, WordNumbering numbering) {
  if (i < 1) throw InvalidIndex(static_cast<long long>(i));
  // w_i is the binary form of i (i + 1 without epsilon) minus its leading 1.
  const std::uint64_t j = numbering.include_epsilon ? i : i + 1;
  const int width = std::bit_width(j);
  std::string word;
  word.reserve(static_cast<std::size_t>(width - 1));
  for (int b = width - 2; b >= 0; --b) word += ((j >> b) & 1) ? '1' : '0';
  return word;
}

std::uint64_t word_index(std::string_view word, WordNumbering numbering) {
  if (word.size() > 62) throw Error("word_index: word longer than 62 symbols");
  std::uint64_t j = 1;
  for (const char c : word) {
    if (c != '0' && c != '1') throw Error(std::string("word_index: symbol '") + c + "' is not in {0,1}");
    j = (j << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return numbering.include_epsilon ? j : j - 1;
}

bool LanguageSpec::accepts(std::string_view word) const {
  std::size_t s = start;
  for (const char c : word) s = next[s][c == '1' ? 1 : 0];
  return accepting[s];
}

namespace {

std::size_t parse_id(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw Error("parse_dfa: line " + std::to_string(line) + ": bad number '" + std::string(tok) + "'");
  }
  return v;
}

// Words w with "1" + w <= binary(x), i.e. the count over j in [1, x].
std::uint64_t accepted_upto(const LanguageSpec& lang, std::uint64_t x) {
  if (x == 0) return 0;
  const int width = std::bit_width(x);
  const std::size_t n = lang.states;

  // reach[s]: words of the current length leading from start to s.
  std::vector<std::uint64_t> reach(n, 0), tmp(n);
  reach[lang.start] = 1;
  std::uint64_t total = 0;
  for (int len = 0; len <= width - 2; ++len) {
    for (std::size_t s = 0; s < n; ++s) {
      if (lang.accepting[s]) total += reach[s];
    }
    std::fill(tmp.begin(), tmp.end(), 0);
    for (std::size_t s = 0; s < n; ++s) {
      tmp[lang.next[s][0]] += reach[s];
      tmp[lang.next[s][1]] += reach[s];
    }
    reach.swap(tmp);
  }

  // accept_in[r][s]: words of length r leading from s to an accepting state.
  std::vector<std::vector<std::uint64_t>> accept_in(static_cast<std::size_t>(width), std::vector<std::uint64_t>(n));
  for (std::size_t s = 0; s < n; ++s) accept_in[0][s] = lang.accepting[s] ? 1 : 0;
  for (std::size_t r = 1; r < accept_in.size(); ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      accept_in[r][s] = accept_in[r - 1][lang.next[s][0]] + accept_in[r - 1][lang.next[s][1]];
    }
  }

  std::size_t s = lang.start;
  for (int b = width - 2; b >= 0; --b) {
    if ((x >> b) & 1) {
      total += accept_in[static_cast<std::size_t>(b)][lang.next[s][0]];
      s = lang.next[s][1];
    } else {
      s = lang.next[s][0];
    }
  }
  if (lang.accepting[s]) ++total;
  return total;
}

}  // namespace

LanguageSpec parse_dfa(std::string_view text) {
  LanguageSpec dfa;
  std::optional<std::size_t> start;
  std::vector<std::array<std::optional<std::size_t>, 2>> next;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto check_state = [&](std::size_t id) {
    if (id >= dfa.states) {
      throw Error("parse_dfa: line " + std::to_string(line_no) + ": state " + std::to_string(id) +
                  " out of range");
    }
    return id;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] != "states" && dfa.states == 0) {
      throw Error("parse_dfa: line " + std::to_string(line_no) + ": 'states' must come first");
    }
    if (tok[0] == "states" && tok.size() == 2) {
      dfa.states = parse_id(tok[1], line_no);
      if (dfa.states == 0) throw Error("parse_dfa: a DFA needs at least one state");
      dfa.accepting.assign(dfa.states, false);
      next.assign(dfa.states, {});
    } else if (tok[0] == "start" && tok.size() == 2) {
      start = check_state(parse_id(tok[1], line_no));
    } else if (tok[0] == "accept") {
      for (std::size_t i = 1; i < tok.size(); ++i) dfa.accepting[check_state(parse_id(tok[i], line_no))] = true;
    } else if (tok[0] == "trans" && tok.size() == 4 && (tok[2] == "0" || tok[2] == "1")) {
      auto& slot = next[check_state(parse_id(tok[1], line_no))][tok[2] == "1" ? 1 : 0];
      if (slot) throw Error("parse_dfa: line " + std::to_string(line_no) + ": duplicate transition");
      slot = check_state(parse_id(tok[3], line_no));
    } else {
      throw Error("parse_dfa: line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
  }
  if (dfa.states == 0) throw Error("parse_dfa: missing 'states' line");
  if (!start) throw Error("parse_dfa: missing 'start' line");
  dfa.start = *start;
  dfa.next.resize(dfa.states);
  for (std::size_t s = 0; s < dfa.states; ++s) {
    for (int b = 0; b < 2; ++b) {
      if (!next[s][static_cast<std::size_t>(b)]) {
        throw Error("parse_dfa: state " + std::to_string(s) + " has no transition on " + std::to_string(b));
      }
      dfa.next[s][static_cast<std::size_t>(b)] = *next[s][static_cast<std::size_t>(b)];
    }
  }
  return dfa;
}

LanguageSpec load_dfa(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_dfa: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dfa(ss.str());
}

std::uint64_t language_count(const LanguageSpec& lang, std::uint64_t n, WordNumbering numbering) {
  if (n <= 1) return 0;
  if (numbering.include_epsilon) return accepted_upto(lang, n - 1);
  return accepted_upto(lang, n) - accepted_upto(lang, 1);
}

}  // namespace emergelab::candidates
