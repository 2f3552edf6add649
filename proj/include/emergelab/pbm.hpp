#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace emergelab {

// Row-major black/white raster; true is black.
class BitGrid {
 public:
  BitGrid(std::size_t width, std::size_t height) : width_(width), height_(height), cells_(width * height, 0) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  bool get(std::size_t x, std::size_t y) const { return cells_.at(y * width_ + x) != 0; }
  void set(std::size_t x, std::size_t y, bool black = true) { cells_.at(y * width_ + x) = black ? 1 : 0; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> cells_;
};

// Netpbm P4: "P4\n<w> <h>\n", rows packed MSB-first and padded to a byte.
// Throws EmptyImage for a zero dimension.
std::string render_pbm(const BitGrid& grid);

}  // namespace emergelab
