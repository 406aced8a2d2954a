#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "splicedge/plane.hpp"

namespace splicedge {

/// Spread statistics of a composite gradient map.
struct GradientStats {
  double sigma = 0.0;      // population standard deviation over all pixels
  double threshold = 0.0;  // always 3 * sigma
};

/// 3x3 Laplacian response, borders handled by replicate padding.
///
///     0  1  0
///     1 -4  1
///     0  1  0
inline ChannelPlane laplacian(const ChannelPlane& plane) {
  if (plane.empty()) throw std::invalid_argument("laplacian: empty plane");
  ChannelPlane out(plane.width(), plane.height());
  for (int y = 0; y < plane.height(); ++y) {
    for (int x = 0; x < plane.width(); ++x) {
      // accumulate in kernel row-major order so results are reproducible
      double acc = plane.at_clamped(x, y - 1);
      acc += plane.at_clamped(x - 1, y);
      acc += -4.0 * plane.at(x, y);
      acc += plane.at_clamped(x + 1, y);
      acc += plane.at_clamped(x, y + 1);
      out.at(x, y) = acc;
    }
  }
  return out;
}

/// Per-pixel Euclidean norm across the channel responses of one color space.
inline ChannelPlane composite_gradient(const std::vector<ChannelPlane>& planes) {
  if (planes.empty())
    throw std::invalid_argument("composite_gradient: no input planes");
  for (const auto& p : planes)
    if (!p.same_size(planes.front()))
      throw std::invalid_argument("composite_gradient: plane sizes disagree");

  ChannelPlane out(planes.front().width(), planes.front().height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      double sum_sq = 0.0;
      for (const auto& p : planes) {
        const double v = p.at(x, y);
        sum_sq += v * v;
      }
      out.at(x, y) = std::sqrt(sum_sq);
    }
  }
  return out;
}

/// Binarize a gradient map at three standard deviations (strict inequality).
///
/// Sigma is the population (divide-by-N) deviation over the whole map. The
/// degenerate constant-nonzero map has sigma = 0 and flags every pixel; real
/// images never hit that case.
inline std::pair<EdgeMap, GradientStats> threshold_edges(const ChannelPlane& grad) {
  if (grad.empty()) throw std::invalid_argument("threshold_edges: empty plane");
  const double n = static_cast<double>(grad.pixel_count());

  double sum = 0.0;
  for (double v : grad) sum += v;
  const double mean = sum / n;

  double sq_dev = 0.0;
  for (double v : grad) sq_dev += (v - mean) * (v - mean);
  GradientStats stats;
  stats.sigma = std::sqrt(sq_dev / n);
  stats.threshold = 3.0 * stats.sigma;

  EdgeMap map(grad.width(), grad.height());
  for (int y = 0; y < grad.height(); ++y)
    for (int x = 0; x < grad.width(); ++x)
      map.at(x, y) = grad.at(x, y) > stats.threshold ? 1 : 0;
  return {std::move(map), stats};
}

/// Full per-space edge detection: Laplacian responses, composite gradient,
/// 3-sigma binarization.
inline std::pair<EdgeMap, GradientStats> detect_edges_in_space(
    const std::vector<ChannelPlane>& planes) {
  std::vector<ChannelPlane> responses;
  responses.reserve(planes.size());
  for (const auto& p : planes) responses.push_back(laplacian(p));
  return threshold_edges(composite_gradient(responses));
}

}  // namespace splicedge
