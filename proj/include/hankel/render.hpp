#pragma once

// Visualization of a Hankel-value grid as a PPM (P6) pixel map, one pixel per
// cell: zero is white, positive values shade toward red and negative toward
// blue, with intensity clamped at |value| = 15. The palette is version-tagged
// so golden images can evolve deliberately.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hankel/scan.hpp"

namespace hankel::render {

inline constexpr int palette_version = 1;

struct rgb {
  std::uint8_t r;
  std::uint8_t g;
  std::uint8_t b;

  bool operator==(const rgb&) const = default;
};

// Palette v1: total and deterministic over all integers.
//   0           -> (255, 255, 255)
//   v > 0       -> (255-12c, 40+10c, 40)        with c = min(|v|, 15)
//   v < 0       -> (40, 40+10c, 255-12c)
rgb palette(i64 value);

struct image {
  i64 width = 0;
  i64 height = 0;
  std::vector<std::uint8_t> bytes;  // row-major RGB, top row first
};

// Lay the grid out as pixels: m increases rightward and n upward, so the top
// image row is n = n_max. With transpose, n increases rightward and m upward
// (for side-by-side comparison with plots indexed the other way around).
image assemble(const scan::grid& g, bool transpose);

// Exactly "P6\n<width> <height>\n255\n" followed by the pixel bytes.
void write_ppm(std::ostream& out, const image& img);
std::string ppm_string(const image& img);

}  // namespace hankel::render
