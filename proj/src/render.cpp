#include "hankel/render.hpp"

#include <ostream>
#include <sstream>

namespace hankel::render {

rgb palette(i64 value) {
  if (value == 0) return {255, 255, 255};
  // Clamp before negating so |INT64_MIN| is never materialized.
  const i64 clamped = value < 0 ? (value < -15 ? 15 : -value)
                                : (value > 15 ? 15 : value);
  const std::uint8_t c = static_cast<std::uint8_t>(clamped);
  const std::uint8_t hot = static_cast<std::uint8_t>(255 - 12 * c);
  const std::uint8_t mid = static_cast<std::uint8_t>(40 + 10 * c);
  if (value > 0) return {hot, mid, 40};
  return {40, mid, hot};
}

image assemble(const scan::grid& g, bool transpose) {
  image img;
  if (g.win.empty()) return img;
  const i64 n_lo = std::max<i64>(g.win.n_min, 1);
  const i64 cols = g.win.m_max + 1;   // m axis
  const i64 rows = g.win.n_max - n_lo + 1;  // n axis
  img.width = transpose ? rows : cols;
  img.height = transpose ? cols : rows;
  img.bytes.resize(static_cast<std::size_t>(img.width * img.height * 3));

  std::size_t at = 0;
  for (i64 y = 0; y < img.height; ++y)
    for (i64 x = 0; x < img.width; ++x) {
      // Top row holds the largest value of the vertical axis.
      const i64 m = transpose ? g.win.m_max - y : x;
      const i64 n = transpose ? n_lo + x : g.win.n_max - y;
      const rgb px = palette(g.at(m, n));
      img.bytes[at++] = px.r;
      img.bytes[at++] = px.g;
      img.bytes[at++] = px.b;
    }
  return img;
}

void write_ppm(std::ostream& out, const image& img) {
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.bytes.data()),
            static_cast<std::streamsize>(img.bytes.size()));
}

std::string ppm_string(const image& img) {
  std::ostringstream out;
  write_ppm(out, img);
  return std::move(out).str();
}

}  // namespace hankel::render
