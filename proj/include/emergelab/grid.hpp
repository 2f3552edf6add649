#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace emergelab {

// Integer lattice point shared by the 2-D engines. Life uses x = column
// (rightward) and y = row (downward); the ant uses y upward.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Row-major (y, then x): the order cells are read from an RLE file.
  friend bool operator<(const Cell& a, const Cell& b) noexcept {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

// 64-bit key for coordinates that fit in 32 bits each.
inline std::uint64_t pack(Cell c) noexcept {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
         static_cast<std::uint32_t>(c.y);
}

inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct CellHash {
  std::size_t operator()(Cell c) const noexcept { return static_cast<std::size_t>(mix64(pack(c))); }
};

struct BBox {
  std::int64_t min_x = 0, min_y = 0, max_x = -1, max_y = -1;

  bool empty() const noexcept { return max_x < min_x || max_y < min_y; }
  std::int64_t width() const noexcept { return empty() ? 0 : max_x - min_x + 1; }
  std::int64_t height() const noexcept { return empty() ? 0 : max_y - min_y + 1; }
  friend bool operator==(const BBox&, const BBox&) = default;
};

// Finite set of live cells, stored sorted in row-major order without duplicates.
class CellSet {
 public:
  CellSet() = default;
  CellSet(std::initializer_list<Cell> cells) : CellSet(std::vector<Cell>(cells)) {}
  explicit CellSet(std::vector<Cell> cells);

  // Caller guarantees `cells` is already sorted and unique.
  static CellSet from_sorted(std::vector<Cell> cells);

  bool empty() const noexcept { return cells_.empty(); }
  std::size_t size() const noexcept { return cells_.size(); }
  std::span<const Cell> cells() const noexcept { return cells_; }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }

  bool contains(Cell c) const noexcept;
  BBox bbox() const noexcept;

  CellSet translated(std::int64_t dx, std::int64_t dy) const;
  // Applies one of the 8 symmetries of the square lattice (0 = identity).
  CellSet transformed(int symmetry) const;
  // Translated so the bounding-box corner is the origin.
  CellSet canonical() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<Cell> cells_;
};

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const noexcept { return s.hash(); }
};

}  // namespace emergelab
