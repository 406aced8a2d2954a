#pragma once

#include <stdexcept>
#include <string>

#include "splicedge/plane.hpp"

namespace splicedge::cli {

/// A file that is missing, unreadable, undecodable, or unwritable.
/// Mapped to exit code 2 by the driver.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A raster whose sample depth is not 8 bits per channel.
/// Mapped to exit code 3 by the driver.
struct UnsupportedDepthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decode a raster file to interleaved 8-bit RGB. Grayscale inputs are
/// replicated across channels; an alpha channel is dropped.
Rgb8Image load_rgb8(const std::string& path);

/// Decode a region mask: any pixel above 127 counts as inside the region.
/// Multi-channel masks are converted to grayscale first.
EdgeMap load_mask(const std::string& path);

/// Write an 8-bit RGB image as PNG.
void save_rgb8_png(const std::string& path, const Rgb8Image& image);

/// Write a binary map as a single-channel PNG with values {0, 255}.
void save_mask_png(const std::string& path, const EdgeMap& map);

/// Write byte values as-is to a single-channel PNG (used for per-pixel
/// class annotations, where the values are small ids rather than a mask).
void save_gray8_png(const std::string& path, const Plane<std::uint8_t>& plane);

}  // namespace splicedge::cli
