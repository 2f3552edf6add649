#include "emergelab/grid.hpp"

#include <algorithm>

namespace emergelab {

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellSet CellSet::from_sorted(std::vector<Cell> cells) {
  CellSet s;
  s.cells_ = std::move(cells);
  return s;
}

bool CellSet::contains(Cell c) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

BBox CellSet::bbox() const noexcept {
  if (cells_.empty()) return {};
  BBox b{cells_.front().x, cells_.front().y, cells_.front().x, cells_.back().y};
  for (const Cell& c : cells_) {
    b.min_x = std::min(b.min_x, c.x);
    b.max_x = std::max(b.max_x, c.x);
  }
  return b;
}

CellSet CellSet::translated(std::int64_t dx, std::int64_t dy) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back({c.x + dx, c.y + dy});
  return from_sorted(std::move(out));
}

CellSet CellSet::transformed(int symmetry) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (Cell c : cells_) {
    if (symmetry & 4) std::swap(c.x, c.y);
    if (symmetry & 1) c.x = -c.x;
    if (symmetry & 2) c.y = -c.y;
    out.push_back(c);
  }
  return CellSet(std::move(out));
}

CellSet CellSet::canonical() const {
  if (cells_.empty()) return {};
  const BBox b = bbox();
  return translated(-b.min_x, -b.min_y);
}

std::size_t CellSet::hash() const noexcept {
  std::uint64_t h = mix64(cells_.size());
  for (const Cell& c : cells_) h = mix64(h ^ pack(c));
  return static_cast<std::size_t>(h);
}

}  // namespace emergelab
