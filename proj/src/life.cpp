#include "emergelab/life.hpp"
#include "emergelab/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <unordered_map>

namespace emergelab::life {

namespace {

using Row = std::span<const Cell>;

// Live cells per column over up to three adjacent rows, sorted by x.
void column_counts(Row a, Row b, Row c, std::vector<std::pair<std::int64_t, int>>& out) {
  out.clear();
  std::size_t i = 0, j = 0, k = 0;
  constexpr std::int64_t kEnd = std::numeric_limits<std::int64_t>::max();
  for (;;) {
    const std::int64_t xa = i < a.size() ? a[i].x : kEnd;
    const std::int64_t xb = j < b.size() ? b[j].x : kEnd;
    const std::int64_t xc = k < c.size() ? c[k].x : kEnd;
    const std::int64_t x = std::min({xa, xb, xc});
    if (x == kEnd) return;
    const int n = (xa == x) + (xb == x) + (xc == x);
    i += xa == x;
    j += xb == x;
    k += xc == x;
    out.emplace_back(x, n);
  }
}

// Births and survivals in row y, given the rows above, at and below it.
void sweep_row(std::int64_t y, Row above, Row at, Row below, std::vector<std::pair<std::int64_t, int>>& cols,
               std::vector<Cell>& next) {
  column_counts(above, at, below, cols);
  std::size_t lo = 0, hi = 0, self = 0;
  int window = 0;  // live cells in columns [x - 1, x + 1]
  std::int64_t done = std::numeric_limits<std::int64_t>::min();
  for (const auto& col : cols) {
    for (std::int64_t x = std::max(col.first - 1, done + 1); x <= col.first + 1; ++x) {
      while (hi < cols.size() && cols[hi].first <= x + 1) window += cols[hi++].second;
      while (cols[lo].first < x - 1) window -= cols[lo++].second;
      while (self < at.size() && at[self].x < x) ++self;
      const bool alive = self < at.size() && at[self].x == x;
      const int neighbours = window - alive;
      if (neighbours == 3 || (neighbours == 2 && alive)) next.push_back({x, y});
      done = x;
    }
  }
}

}  // namespace

// Rows of the sorted input are contiguous runs; each output row needs only the
// three input rows around it, so one pass in row-major order emits the next
// generation already sorted.
CellSet step(const CellSet& cells) {
  if (cells.empty()) return {};
  const std::span<const Cell> all = cells.cells();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j].y == all[i].y) ++j;
    rows.push_back(all.subspan(i, j - i));
    i = j;
  }
  auto row_at = [&](std::size_t r, std::int64_t y) -> Row {
    return r < rows.size() && rows[r].front().y == y ? rows[r] : Row{};
  };

  std::vector<Cell> next;
  next.reserve(all.size() + all.size() / 2);
  std::vector<std::pair<std::int64_t, int>> cols;
  std::size_t r = 0;  // first input row with y >= current y - 1
  std::int64_t y = rows.front().front().y - 1;
  while (r < rows.size()) {
    while (r < rows.size() && rows[r].front().y < y - 1) ++r;
    if (r == rows.size()) break;
    if (rows[r].front().y > y + 1) {
      y = rows[r].front().y - 1;
      continue;
    }
    const Row above = row_at(r, y - 1);
    const std::size_t r_at = r + !above.empty();
    const Row at = row_at(r_at, y);
    const Row below = row_at(r_at + !at.empty(), y + 1);
    sweep_row(y, above, at, below, cols, next);
    ++y;
  }
  return CellSet::from_sorted(std::move(next));
}

CellSet run(const CellSet& cells, std::size_t generations) {
  CellSet s = cells;
  for (std::size_t i = 0; i < generations; ++i) s = step(s);
  return s;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Extinct: return "extinct";
    case Verdict::StillLife: return "still_life";
    case Verdict::Oscillator: return "oscillator";
    case Verdict::Translator: return "translator";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

FateReport detect_fate(const CellSet& cells, std::size_t budget) {
  if (budget < 1) throw Error("detect_fate: budget must be at least 1");
  struct Seen {
    std::size_t generation;
    std::int64_t x, y;
  };
  std::unordered_map<CellSet, Seen, CellSetHash> seen;
  CellSet state = cells;
  for (std::size_t t = 0; t <= budget; ++t) {
    if (state.empty()) return {Verdict::Extinct, t, 0, 0, 0};
    const BBox box = state.bbox();
    auto [it, inserted] = seen.try_emplace(state.canonical(), Seen{t, box.min_x, box.min_y});
    if (!inserted) {
      const Seen& first = it->second;
      const std::size_t period = t - first.generation;
      const std::int64_t dx = box.min_x - first.x;
      const std::int64_t dy = box.min_y - first.y;
      if (dx != 0 || dy != 0) return {Verdict::Translator, first.generation, period, dx, dy};
      return {period == 1 ? Verdict::StillLife : Verdict::Oscillator, first.generation, period, 0, 0};
    }
    if (t < budget) state = step(state);
  }
  return {Verdict::Unknown, budget, 0, 0, 0};
}

std::vector<CellSet> clusters(const CellSet& cells, std::int64_t gap) {
  const auto all = cells.cells();
  std::unordered_map<Cell, std::size_t, CellHash> index;
  index.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::int64_t dy = -gap; dy <= gap; ++dy) {
      for (std::int64_t dx = -gap; dx <= gap; ++dx) {
        auto it = index.find({all[i].x + dx, all[i].y + dy});
        if (it != index.end()) parent[find(it->second)] = find(i);
      }
    }
  }

  std::unordered_map<std::size_t, std::vector<Cell>> groups;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t root = find(i);
    auto [it, inserted] = groups.try_emplace(root);
    if (inserted) order.push_back(root);
    it->second.push_back(all[i]);
  }
  std::vector<CellSet> out;
  out.reserve(order.size());
  for (const std::size_t root : order) out.push_back(CellSet::from_sorted(std::move(groups[root])));
  return out;
}

}  // namespace emergelab::life
