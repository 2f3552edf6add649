#include <algorithm>
#include <cctype>
#include <charconv>

#include "emergelab/error.hpp"
#include "emergelab/life.hpp"

namespace emergelab::life {

namespace {

constexpr std::size_t kMaxLine = 69;

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char p, char q) {
           return std::tolower(static_cast<unsigned char>(p)) ==
                  std::tolower(static_cast<unsigned char>(q));
         });
}

struct Header {
  std::int64_t width = 0;
  std::int64_t height = 0;
};

Header parse_header(const Line& line) {
  Header h;
  bool have_x = false, have_y = false;
  std::string_view rest = line.text;
  std::size_t consumed = 0;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const std::size_t column = consumed + 1;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw RleParseError(line.number, column, "expected 'key = value' in header");
    }
    const std::string_view key = trim(item.substr(0, eq));
    const std::string_view value = trim(item.substr(eq + 1));
    if (key == "x" || key == "y") {
      std::int64_t n = -1;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc{} || ptr != value.data() + value.size() || n < 0) {
        throw RleParseError(line.number, column, "bad dimension '" + std::string(value) + "'");
      }
      (key == "x" ? h.width : h.height) = n;
      (key == "x" ? have_x : have_y) = true;
    } else if (key == "rule") {
      if (!iequals(value, "B3/S23")) throw UnsupportedRule(std::string(value));
    } else {
      throw RleParseError(line.number, column, "unknown header key '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    consumed += comma + 1;
  }
  if (!have_x || !have_y) throw RleParseError(line.number, 1, "header needs both x and y");
  return h;
}

}  // namespace

CellSet parse_rle(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && (trim(lines[i].text).empty() || lines[i].text.front() == '#')) ++i;
  if (i == lines.size()) throw RleParseError(lines.empty() ? 1 : lines.back().number, 1, "missing header");
  const Header header = parse_header(lines[i++]);

  std::vector<Cell> cells;
  std::int64_t x = 0, y = 0;
  std::int64_t count = 0;  // 0: no pending count
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (!line.text.empty() && line.text.front() == '#') continue;
    for (std::size_t col = 0; col < line.text.size(); ++col) {
      const char ch = line.text[col];
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (count == 0 && ch == '0') throw RleParseError(line.number, col + 1, "run count must be positive");
        count = count * 10 + (ch - '0');
        if (count > (std::int64_t{1} << 31)) throw RleParseError(line.number, col + 1, "run too long");
        continue;
      }
      if (ch == '!' && count != 0) throw RleParseError(line.number, col + 1, "run count without a tag");
      const std::int64_t n = count != 0 ? count : 1;
      count = 0;
      switch (ch) {
        case 'b':
          x += n;
          break;
        case 'o':
          for (std::int64_t k = 0; k < n; ++k) cells.push_back({x + k, y});
          x += n;
          break;
        case '$':
          y += n;
          x = 0;
          break;
        case '!':
          return CellSet(std::move(cells));
        default:
          throw RleParseError(line.number, col + 1, std::string("unexpected symbol '") + ch + "'");
      }
      if (x > header.width || (ch == 'o' && y >= header.height)) {
        throw RleParseError(line.number, col + 1, "cells run outside the declared x/y bounds");
      }
    }
  }
  throw RleParseError(lines.back().number, lines.back().text.size() + 1, "missing '!' terminator");
}

std::string write_rle(const CellSet& input) {
  const CellSet cells = input.canonical();
  const BBox box = cells.bbox();
  std::string out = "x = " + std::to_string(box.width()) + ", y = " + std::to_string(box.height()) +
                    ", rule = B3/S23\n";

  std::vector<std::string> tokens;
  auto run_token = [](std::int64_t n, char tag) {
    return n == 1 ? std::string(1, tag) : std::to_string(n) + tag;
  };
  std::int64_t row = 0, next_x = 0;
  for (std::size_t k = 0; k < cells.size();) {
    const Cell start = cells.cells()[k];
    if (start.y != row) {
      tokens.push_back(run_token(start.y - row, '$'));
      row = start.y;
      next_x = 0;
    }
    std::size_t end = k + 1;
    while (end < cells.size() && cells.cells()[end].y == row &&
           cells.cells()[end].x == start.x + static_cast<std::int64_t>(end - k)) {
      ++end;
    }
    if (start.x > next_x) tokens.push_back(run_token(start.x - next_x, 'b'));
    tokens.push_back(run_token(static_cast<std::int64_t>(end - k), 'o'));
    next_x = start.x + static_cast<std::int64_t>(end - k);
    k = end;
  }
  tokens.emplace_back("!");

  std::string line;
  for (const auto& t : tokens) {
    if (line.size() + t.size() > kMaxLine) {
      out += line;
      out += '\n';
      line.clear();
    }
    line += t;
  }
  out += line;
  out += '\n';
  return out;
}

CellSet parse_cells(std::string_view text) {
  std::vector<Cell> cells;
  std::int64_t y = 0;
  for (const Line& line : split_lines(text)) {
    if (!line.text.empty() && line.text.front() == '!') continue;
    for (std::size_t x = 0; x < line.text.size(); ++x) {
      const char ch = line.text[x];
      if (ch == 'O' || ch == '*') {
        cells.push_back({static_cast<std::int64_t>(x), y});
      } else if (ch != '.' && !std::isspace(static_cast<unsigned char>(ch))) {
        throw RleParseError(line.number, x + 1, std::string("unexpected symbol '") + ch + "' in .cells");
      }
    }
    ++y;
  }
  return CellSet(std::move(cells));
}

}  // namespace emergelab::life
