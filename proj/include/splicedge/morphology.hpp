#pragma once

#include <stdexcept>

#include "splicedge/plane.hpp"

namespace splicedge {

/// Morphological dilation with a (2r+1)x(2r+1) square structuring element.
/// The square element makes the reach a Chebyshev ball of radius r.
inline EdgeMap dilate_square(const EdgeMap& map, int radius) {
  if (radius < 0) throw std::invalid_argument("dilate_square: negative radius");
  if (radius == 0) return map;

  // separable: horizontal run-OR, then vertical
  EdgeMap horiz(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      std::uint8_t v = 0;
      const int x0 = std::max(0, x - radius);
      const int x1 = std::min(map.width() - 1, x + radius);
      for (int xx = x0; xx <= x1 && !v; ++xx) v = map.at(xx, y) != 0;
      horiz.at(x, y) = v;
    }
  }
  EdgeMap out(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      std::uint8_t v = 0;
      const int y0 = std::max(0, y - radius);
      const int y1 = std::min(map.height() - 1, y + radius);
      for (int yy = y0; yy <= y1 && !v; ++yy) v = horiz.at(x, yy) != 0;
      out.at(x, y) = v;
    }
  }
  return out;
}

}  // namespace splicedge
