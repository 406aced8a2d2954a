#pragma once

#include <cmath>
#include <utility>

#include "splicedge/plane.hpp"

namespace splicedge {

/// Saturation channel: S = 1 - min(R,G,B) / (R+G+B).
///
/// Body-reflection gain and illuminant strength cancel in the ratio, so S is
/// flat across shading and shadow boundaries of a matte surface. A pure black
/// pixel (R+G+B = 0) carries no chroma and maps to 0.
inline ChannelPlane to_saturation(const RgbImage& img) {
  require_valid(img);
  ChannelPlane out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double r = img.r.at(x, y);
      const double g = img.g.at(x, y);
      const double b = img.b.at(x, y);
      const double sum = r + g + b;
      out.at(x, y) = sum == 0.0 ? 0.0 : 1.0 - std::min({r, g, b}) / sum;
    }
  }
  return out;
}

/// Opponent channels o1 = (R-G)/2 and o2 = B/2 - (R+G)/4.
///
/// An equal additive offset on all three channels cancels, which is exactly
/// the form a specular highlight takes under a quasi-white illuminant; the
/// pair is therefore blind to highlight boundaries.
inline std::pair<ChannelPlane, ChannelPlane> to_opponent(const RgbImage& img) {
  require_valid(img);
  ChannelPlane o1(img.width(), img.height());
  ChannelPlane o2(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double r = img.r.at(x, y);
      const double g = img.g.at(x, y);
      const double b = img.b.at(x, y);
      o1.at(x, y) = (r - g) / 2.0;
      o2.at(x, y) = b / 2.0 - r / 4.0 - g / 4.0;
    }
  }
  return {std::move(o1), std::move(o2)};
}

/// sRGB electro-optical transfer function for one sample.
inline double srgb_to_linear(double v) {
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

/// Optional decoding step: undo the sRGB transfer curve before the
/// photometric transforms. Off by default in the pipeline.
inline RgbImage linearize_srgb(const RgbImage& img) {
  require_valid(img);
  RgbImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.r.at(x, y) = srgb_to_linear(img.r.at(x, y));
      out.g.at(x, y) = srgb_to_linear(img.g.at(x, y));
      out.b.at(x, y) = srgb_to_linear(img.b.at(x, y));
    }
  }
  return out;
}

}  // namespace splicedge
