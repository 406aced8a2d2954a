#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splicedge/plane.hpp"

namespace splicedge {

/// Edge classes a scene boundary can be declared as, plus the splice class
/// that only composites produce.
enum class BoundaryClass : std::uint8_t {
  None = 0,
  Shading,
  Shadow,
  Highlight,
  Material,
  Occlusion,
  Splice,
};

inline const char* to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::None: return "none";
    case BoundaryClass::Shading: return "shading";
    case BoundaryClass::Shadow: return "shadow";
    case BoundaryClass::Highlight: return "highlight";
    case BoundaryClass::Material: return "material";
    case BoundaryClass::Occlusion: return "occlusion";
    case BoundaryClass::Splice: return "splice";
  }
  return "none";
}

/// Scalar geometry term over the image. Constant per patch or a linear ramp
/// across the frame; ramps have an exactly-zero Laplacian away from region
/// boundaries, so they model smooth shading without creating edges.
struct ScalarField {
  enum class Kind : std::uint8_t { Constant, RampX, RampY };

  Kind kind = Kind::Constant;
  double v0 = 0.0;
  double v1 = 0.0;

  static ScalarField constant(double v) { return {Kind::Constant, v, v}; }
  static ScalarField ramp_x(double from, double to) {
    return {Kind::RampX, from, to};
  }
  static ScalarField ramp_y(double from, double to) {
    return {Kind::RampY, from, to};
  }

  double at(int x, int y, int width, int height) const {
    switch (kind) {
      case Kind::Constant:
        return v0;
      case Kind::RampX:
        return width > 1 ? v0 + (v1 - v0) * (double(x) / (width - 1)) : v0;
      case Kind::RampY:
        return height > 1 ? v0 + (v1 - v0) * (double(y) / (height - 1)) : v0;
    }
    return v0;
  }
};

/// Material and geometry description of one surface patch: integrated
/// sensor-albedo products, body and interface reflection gains, and the
/// integrated specular factor.
struct SurfacePatch {
  std::array<double, 3> albedo{0.5, 0.5, 0.5};  // k_R, k_G, k_B in [0,1]
  ScalarField body = ScalarField::constant(1.0);
  ScalarField specular = ScalarField::constant(0.0);
  double specular_coeff = 0.0;  // c_s * f
};

struct Region {
  std::string name;
  EdgeMap mask;  // which pixels the region owns
  SurfacePatch patch;
  BoundaryClass boundary = BoundaryClass::None;
};

/// Declarative scene: an illuminant level and surface patches whose masks
/// partition the frame.
struct SceneSpec {
  int width = 0;
  int height = 0;
  double illuminant = 1.0;
  std::vector<Region> regions;
};

/// One-pixel-thick boundary map with a class code per boundary pixel.
struct GroundTruth {
  EdgeMap boundary;
  Plane<std::uint8_t> classes;  // BoundaryClass codes
};

struct RenderResult {
  RgbImage image;
  GroundTruth truth;
  bool clipped = false;  // set when any channel value had to be clipped
};

/// Inner 4-connected boundary: a pixel is flagged iff it is inside the mask
/// and at least one in-frame 4-neighbor is outside. The frame border itself is
/// never a boundary.
inline EdgeMap ground_truth_boundary(const EdgeMap& mask) {
  if (mask.empty())
    throw std::invalid_argument("ground_truth_boundary: empty mask");
  EdgeMap out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y) == 0) continue;
      const bool open =
          (mask.in_bounds(x - 1, y) && mask.at(x - 1, y) == 0) ||
          (mask.in_bounds(x + 1, y) && mask.at(x + 1, y) == 0) ||
          (mask.in_bounds(x, y - 1) && mask.at(x, y - 1) == 0) ||
          (mask.in_bounds(x, y + 1) && mask.at(x, y + 1) == 0);
      out.at(x, y) = open ? 1 : 0;
    }
  }
  return out;
}

namespace detail {

/// Owner index per pixel; throws unless the region masks partition the frame.
inline Plane<std::uint16_t> region_owners(const SceneSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0)
    throw std::invalid_argument("render: scene dimensions must be positive");
  if (spec.regions.empty())
    throw std::invalid_argument("render: scene has no regions");
  if (spec.illuminant <= 0.0)
    throw std::invalid_argument("render: illuminant must be positive");

  Plane<std::uint16_t> owner(spec.width, spec.height, 0xFFFF);
  for (std::size_t i = 0; i < spec.regions.size(); ++i) {
    const Region& region = spec.regions[i];
    if (region.mask.width() != spec.width || region.mask.height() != spec.height)
      throw std::invalid_argument("render: region mask '" + region.name +
                                  "' does not match scene dimensions");
    for (int y = 0; y < spec.height; ++y) {
      for (int x = 0; x < spec.width; ++x) {
        if (region.mask.at(x, y) == 0) continue;
        if (owner.at(x, y) != 0xFFFF)
          throw std::invalid_argument("render: regions overlap at pixel (" +
                                      std::to_string(x) + "," +
                                      std::to_string(y) + ")");
        owner.at(x, y) = static_cast<std::uint16_t>(i);
      }
    }
  }
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x)
      if (owner.at(x, y) == 0xFFFF)
        throw std::invalid_argument("render: pixel (" + std::to_string(x) +
                                    "," + std::to_string(y) +
                                    ") is covered by no region");
  return owner;
}

}  // namespace detail

/// Render a scene under the two-term reflection model
///   C = e * m_b * k_C + e * m_s * c_s * f
/// with channel values clipped to [0,1] (clipping is reported, not fatal).
/// Ground truth marks the inner boundary of every region that declares a
/// boundary class.
inline RenderResult render(const SceneSpec& spec) {
  const Plane<std::uint16_t> owner = detail::region_owners(spec);

  RenderResult res;
  res.image = RgbImage(spec.width, spec.height);
  res.truth.boundary = EdgeMap(spec.width, spec.height);
  res.truth.classes = Plane<std::uint8_t>(spec.width, spec.height);

  const double e = spec.illuminant;
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const Region& region = spec.regions[owner.at(x, y)];
      const double mb = region.patch.body.at(x, y, spec.width, spec.height);
      const double ms = region.patch.specular.at(x, y, spec.width, spec.height);
      const double spec_term = e * ms * region.patch.specular_coeff;
      for (int c = 0; c < 3; ++c) {
        double v = e * mb * region.patch.albedo[c] + spec_term;
        if (v < 0.0 || v > 1.0) {
          res.clipped = true;
          v = std::clamp(v, 0.0, 1.0);
        }
        (c == 0 ? res.image.r : c == 1 ? res.image.g : res.image.b).at(x, y) = v;
      }
    }
  }

  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const Region& region = spec.regions[owner.at(x, y)];
      if (region.boundary == BoundaryClass::None) continue;
      const std::uint16_t own = owner.at(x, y);
      const bool frontier =
          (owner.in_bounds(x - 1, y) && owner.at(x - 1, y) != own) ||
          (owner.in_bounds(x + 1, y) && owner.at(x + 1, y) != own) ||
          (owner.in_bounds(x, y - 1) && owner.at(x, y - 1) != own) ||
          (owner.in_bounds(x, y + 1) && owner.at(x, y + 1) != own);
      if (frontier) {
        res.truth.boundary.at(x, y) = 1;
        res.truth.classes.at(x, y) = static_cast<std::uint8_t>(region.boundary);
      }
    }
  }
  return res;
}

struct SpliceResult {
  RgbImage image;
  GroundTruth truth;
};

/// Composite: donor pixels inside the paste mask, host pixels outside.
/// Ground truth is the inner boundary of the mask, class Splice.
inline SpliceResult make_splice(const RgbImage& host, const RgbImage& donor,
                                const EdgeMap& paste_mask) {
  require_valid(host);
  require_valid(donor);
  if (host.width() != donor.width() || host.height() != donor.height() ||
      paste_mask.width() != host.width() || paste_mask.height() != host.height())
    throw std::invalid_argument("make_splice: dimensions disagree");

  const std::int64_t inside = count_nonzero(paste_mask);
  if (inside == 0)
    throw std::invalid_argument("make_splice: paste mask is empty");
  if (inside == std::int64_t(paste_mask.pixel_count()))
    throw std::invalid_argument("make_splice: paste mask covers the whole frame");

  SpliceResult res;
  res.image = RgbImage(host.width(), host.height());
  for (int y = 0; y < host.height(); ++y) {
    for (int x = 0; x < host.width(); ++x) {
      const bool in = paste_mask.at(x, y) != 0;
      res.image.r.at(x, y) = in ? donor.r.at(x, y) : host.r.at(x, y);
      res.image.g.at(x, y) = in ? donor.g.at(x, y) : host.g.at(x, y);
      res.image.b.at(x, y) = in ? donor.b.at(x, y) : host.b.at(x, y);
    }
  }
  res.truth.boundary = ground_truth_boundary(paste_mask);
  res.truth.classes = Plane<std::uint8_t>(host.width(), host.height());
  for (int y = 0; y < host.height(); ++y)
    for (int x = 0; x < host.width(); ++x)
      if (res.truth.boundary.at(x, y) != 0)
        res.truth.classes.at(x, y) =
            static_cast<std::uint8_t>(BoundaryClass::Splice);
  return res;
}

// Mask rasterization helpers, used by scene files and the synthetic suites.

/// Half-open axis-aligned rectangle [x0,x1) x [y0,y1), intersected with the frame.
inline void fill_rect(EdgeMap& mask, int x0, int y0, int x1, int y1) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, mask.width());
  y1 = std::min(y1, mask.height());
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) mask.at(x, y) = 1;
}

inline void fill_disk(EdgeMap& mask, double cx, double cy, double radius) {
  const double r2 = radius * radius;
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x) {
      const double dx = x - cx, dy = y - cy;
      if (dx * dx + dy * dy <= r2) mask.at(x, y) = 1;
    }
}

}  // namespace splicedge
