#include "emergelab/pbm.hpp"

#include "emergelab/error.hpp"

namespace emergelab {

std::string render_pbm(const BitGrid& grid) {
  if (grid.width() == 0 || grid.height() == 0) throw EmptyImage();
  std::string out = "P4\n" + std::to_string(grid.width()) + " " + std::to_string(grid.height()) + "\n";
  const std::size_t row_bytes = (grid.width() + 7) / 8;
  out.reserve(out.size() + row_bytes * grid.height());
  for (std::size_t y = 0; y < grid.height(); ++y) {
    for (std::size_t b = 0; b < row_bytes; ++b) {
      unsigned byte = 0;
      for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t x = b * 8 + i;
        if (x < grid.width() && grid.get(x, y)) byte |= 0x80u >> i;
      }
      out.push_back(static_cast<char>(byte));
    }
  }
  return out;
}

}  // namespace emergelab
