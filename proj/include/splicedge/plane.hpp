#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace splicedge {

/// Row-major grid of samples. The workhorse container for channel planes,
/// gradient maps and boolean edge maps.
template <typename T>
class Plane {
 public:
  Plane() = default;

  Plane(int width, int height, T fill = T{})
      : width_(width),
        height_(height),
        samples_(checked_size(width, height), fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  T& at(int x, int y) {
    assert(in_bounds(x, y));
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& at(int x, int y) const {
    assert(in_bounds(x, y));
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }

  /// Read with clamp-to-edge semantics; out-of-range coordinates replicate
  /// the nearest border sample.
  T at_clamped(int x, int y) const {
    x = std::clamp(x, 0, width_ - 1);
    y = std::clamp(y, 0, height_ - 1);
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  bool same_size(const Plane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  T* data() { return samples_.data(); }
  const T* data() const { return samples_.data(); }

  auto begin() { return samples_.begin(); }
  auto end() { return samples_.end(); }
  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

  friend bool operator==(const Plane& a, const Plane& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.samples_ == b.samples_;
  }

 private:
  static std::size_t checked_size(int width, int height) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("Plane: dimensions must be positive");
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> samples_;
};

using ChannelPlane = Plane<double>;

/// Boolean per-pixel map; zero means clear, nonzero (canonically 1) means set.
using EdgeMap = Plane<std::uint8_t>;

inline std::int64_t count_nonzero(const EdgeMap& map) {
  std::int64_t n = 0;
  for (auto v : map) n += (v != 0);
  return n;
}

/// Three real-valued channel planes in [0,1], decoded from 8-bit samples by
/// dividing by 255.
struct RgbImage {
  ChannelPlane r, g, b;

  RgbImage() = default;
  RgbImage(int width, int height)
      : r(width, height), g(width, height), b(width, height) {}

  int width() const { return r.width(); }
  int height() const { return r.height(); }

  bool valid() const {
    return !r.empty() && r.same_size(g) && r.same_size(b);
  }
};

inline void require_valid(const RgbImage& img) {
  if (!img.valid())
    throw std::invalid_argument("RgbImage: channel planes disagree in size");
}

/// Interleaved 8-bit RGB buffer, the shape images take on disk.
struct Rgb8Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;  // r,g,b per pixel, row-major

  Rgb8Image() = default;
  Rgb8Image(int w, int h) : width(w), height(h), samples(size_t(w) * h * 3) {}
};

/// Round-half-up quantization to 8-bit, clipping at both ends.
inline std::uint8_t quantize_sample(double v) {
  double q = std::floor(v * 255.0 + 0.5);
  q = std::clamp(q, 0.0, 255.0);
  return static_cast<std::uint8_t>(q);
}

inline Rgb8Image quantize_to_8bit(const RgbImage& img) {
  require_valid(img);
  Rgb8Image out(img.width(), img.height());
  std::size_t i = 0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.samples[i++] = quantize_sample(img.r.at(x, y));
      out.samples[i++] = quantize_sample(img.g.at(x, y));
      out.samples[i++] = quantize_sample(img.b.at(x, y));
    }
  }
  return out;
}

inline RgbImage from_8bit(const Rgb8Image& img) {
  if (img.width <= 0 || img.height <= 0 ||
      img.samples.size() != std::size_t(img.width) * img.height * 3)
    throw std::invalid_argument("from_8bit: malformed buffer");
  RgbImage out(img.width, img.height);
  std::size_t i = 0;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      out.r.at(x, y) = img.samples[i++] / 255.0;
      out.g.at(x, y) = img.samples[i++] / 255.0;
      out.b.at(x, y) = img.samples[i++] / 255.0;
    }
  }
  return out;
}

}  // namespace splicedge
