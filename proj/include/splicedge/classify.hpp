#pragma once

#include <cstdint>
#include <stdexcept>

#include "splicedge/colorspace.hpp"
#include "splicedge/edges.hpp"
#include "splicedge/morphology.hpp"
#include "splicedge/plane.hpp"

namespace splicedge {

/// Per-pixel edge class implied by the (S-edge, opponent-edge) bit pair.
///
/// The opponent-only signature is shared by shading, shadow and splicing
/// boundaries; no disambiguation between those is attempted, hence the single
/// SplicingCandidate label.
enum class EdgeLabel : std::uint8_t {
  None = 0,                   // (O=0, S=0)
  HighlightOrSInsensitive,    // (O=0, S=1) highlight edges show in S only
  SplicingCandidate,          // (O=1, S=0) also shading and shadow edges
  Material,                   // (O=1, S=1)
};

struct DetectParams {
  int dilate_s = 0;  // optional dilation radius applied to the S map first
};

struct DetectionResult {
  EdgeMap splice_map;
  EdgeMap s_edges;
  EdgeMap o_edges;
  GradientStats s_stats;
  GradientStats o_stats;
};

/// Splicing edges by the logical rule: keep an opponent-space edge pixel only
/// where the S map (optionally dilated first) is clear.
inline EdgeMap splice_from_maps(const EdgeMap& o_edges, const EdgeMap& s_edges,
                                int dilate_s = 0) {
  if (!o_edges.same_size(s_edges))
    throw std::invalid_argument("splice_from_maps: map sizes disagree");
  const EdgeMap s_used = dilate_s > 0 ? dilate_square(s_edges, dilate_s) : s_edges;
  EdgeMap out(o_edges.width(), o_edges.height());
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x)
      out.at(x, y) = (o_edges.at(x, y) != 0 && s_used.at(x, y) == 0) ? 1 : 0;
  return out;
}

/// Full taxonomy over the two edge maps.
inline Plane<std::uint8_t> classify_edges(const EdgeMap& o_edges,
                                          const EdgeMap& s_edges) {
  if (!o_edges.same_size(s_edges))
    throw std::invalid_argument("classify_edges: map sizes disagree");
  Plane<std::uint8_t> out(o_edges.width(), o_edges.height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const bool o = o_edges.at(x, y) != 0;
      const bool s = s_edges.at(x, y) != 0;
      EdgeLabel label;
      if (!o && !s)
        label = EdgeLabel::None;
      else if (!o && s)
        label = EdgeLabel::HighlightOrSInsensitive;
      else if (o && !s)
        label = EdgeLabel::SplicingCandidate;
      else
        label = EdgeLabel::Material;
      out.at(x, y) = static_cast<std::uint8_t>(label);
    }
  }
  return out;
}

/// End-to-end detection: photometric transforms, per-space edge maps, logical
/// combination. All intermediates are kept in the result.
inline DetectionResult detect(const RgbImage& img, const DetectParams& params = {}) {
  require_valid(img);
  DetectionResult res;

  const ChannelPlane s = to_saturation(img);
  auto [o1, o2] = to_opponent(img);

  auto [s_map, s_stats] = detect_edges_in_space({s});
  auto [o_map, o_stats] = detect_edges_in_space({o1, o2});

  res.splice_map = splice_from_maps(o_map, s_map, params.dilate_s);
  res.s_edges = std::move(s_map);
  res.o_edges = std::move(o_map);
  res.s_stats = s_stats;
  res.o_stats = o_stats;
  return res;
}

}  // namespace splicedge
