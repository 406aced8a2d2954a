#pragma once

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splicedge/simulate.hpp"

namespace splicedge {

/// Parse failure in a scene description; carries the 1-based source line.
class SceneParseError : public std::runtime_error {
 public:
  SceneParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

inline double parse_number(const std::string& token, int line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size())
    throw SceneParseError(line, "expected a number, got '" + token + "'");
  return v;
}

inline int parse_int(const std::string& token, int line) {
  const double v = parse_number(token, line);
  const int i = static_cast<int>(v);
  if (double(i) != v)
    throw SceneParseError(line, "expected an integer, got '" + token + "'");
  return i;
}

inline ScalarField parse_field(const std::vector<std::string>& tokens, int line) {
  if (tokens.size() == 2)
    return ScalarField::constant(parse_number(tokens[1], line));
  if (tokens.size() == 4 && (tokens[1] == "ramp-x" || tokens[1] == "ramp-y")) {
    const double v0 = parse_number(tokens[2], line);
    const double v1 = parse_number(tokens[3], line);
    return tokens[1] == "ramp-x" ? ScalarField::ramp_x(v0, v1)
                                 : ScalarField::ramp_y(v0, v1);
  }
  throw SceneParseError(line, "'" + tokens[0] +
                                  "' takes a value or ramp-x/ramp-y v0 v1");
}

inline BoundaryClass parse_boundary(const std::string& token, int line) {
  if (token == "shading") return BoundaryClass::Shading;
  if (token == "shadow") return BoundaryClass::Shadow;
  if (token == "highlight") return BoundaryClass::Highlight;
  if (token == "material") return BoundaryClass::Material;
  if (token == "occlusion") return BoundaryClass::Occlusion;
  throw SceneParseError(line, "unknown boundary class '" + token + "'");
}

struct PendingRegion {
  std::string name;
  int decl_line = 0;
  // geometry: one of rest / rect / disk
  enum class Geom { Unset, Rest, Rect, Disk } geom = Geom::Unset;
  int rect[4] = {0, 0, 0, 0};
  double disk[3] = {0, 0, 0};
  std::optional<std::array<double, 3>> albedo;
  SurfacePatch patch;
  BoundaryClass boundary = BoundaryClass::None;
};

}  // namespace detail

/// Parse the line-oriented scene format:
///
///   width 128
///   height 128
///   illuminant 1.0
///
///   region backdrop
///     rest
///     albedo 0.55 0.35 0.20
///
///   region inlay
///     rect 32 32 96 96          # or: disk cx cy r
///     albedo 0.55 0.35 0.20
///     body 0.5                  # or: body ramp-x v0 v1
///     specular 0.0
///     specular_coeff 0.0
///     boundary shading
///
/// '#' starts a comment. Exactly one region may use 'rest'; it owns every
/// pixel no explicit shape claims. Body defaults to 1, specular to 0.
inline SceneSpec parse_scene(std::string_view text) {
  using detail::PendingRegion;

  int width = 0, height = 0;
  double illuminant = 1.0;
  bool saw_width = false, saw_height = false;
  std::vector<PendingRegion> pending;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];

    if (key == "region") {
      if (tokens.size() != 2)
        throw SceneParseError(line_no, "region needs exactly one name");
      if (!saw_width || !saw_height)
        throw SceneParseError(line_no,
                              "width and height must precede the first region");
      PendingRegion r;
      r.name = tokens[1];
      r.decl_line = line_no;
      pending.push_back(std::move(r));
      continue;
    }

    if (pending.empty()) {
      // header keys
      if (key == "width" && tokens.size() == 2) {
        width = detail::parse_int(tokens[1], line_no);
        saw_width = true;
      } else if (key == "height" && tokens.size() == 2) {
        height = detail::parse_int(tokens[1], line_no);
        saw_height = true;
      } else if (key == "illuminant" && tokens.size() == 2) {
        illuminant = detail::parse_number(tokens[1], line_no);
      } else {
        throw SceneParseError(line_no, "unknown header key '" + key + "'");
      }
      continue;
    }

    PendingRegion& r = pending.back();
    if (key == "rest") {
      if (tokens.size() != 1)
        throw SceneParseError(line_no, "'rest' takes no arguments");
      r.geom = PendingRegion::Geom::Rest;
    } else if (key == "rect") {
      if (tokens.size() != 5)
        throw SceneParseError(line_no, "rect needs x0 y0 x1 y1");
      for (int i = 0; i < 4; ++i)
        r.rect[i] = detail::parse_int(tokens[i + 1], line_no);
      r.geom = PendingRegion::Geom::Rect;
    } else if (key == "disk") {
      if (tokens.size() != 4)
        throw SceneParseError(line_no, "disk needs cx cy r");
      for (int i = 0; i < 3; ++i)
        r.disk[i] = detail::parse_number(tokens[i + 1], line_no);
      r.geom = PendingRegion::Geom::Disk;
    } else if (key == "albedo") {
      if (tokens.size() != 4)
        throw SceneParseError(line_no, "albedo needs three values");
      r.albedo = {{detail::parse_number(tokens[1], line_no),
                   detail::parse_number(tokens[2], line_no),
                   detail::parse_number(tokens[3], line_no)}};
    } else if (key == "body") {
      r.patch.body = detail::parse_field(tokens, line_no);
    } else if (key == "specular") {
      r.patch.specular = detail::parse_field(tokens, line_no);
    } else if (key == "specular_coeff") {
      if (tokens.size() != 2)
        throw SceneParseError(line_no, "specular_coeff needs one value");
      r.patch.specular_coeff = detail::parse_number(tokens[1], line_no);
    } else if (key == "boundary") {
      if (tokens.size() != 2)
        throw SceneParseError(line_no, "boundary needs one class name");
      r.boundary = detail::parse_boundary(tokens[1], line_no);
    } else {
      throw SceneParseError(line_no, "unknown region key '" + key + "'");
    }
  }

  if (!saw_width || !saw_height)
    throw SceneParseError(line_no == 0 ? 1 : line_no,
                          "scene is missing width or height");
  if (width <= 0 || height <= 0)
    throw SceneParseError(1, "scene dimensions must be positive");
  if (pending.empty())
    throw SceneParseError(line_no, "scene declares no regions");

  SceneSpec spec;
  spec.width = width;
  spec.height = height;
  spec.illuminant = illuminant;

  EdgeMap claimed(width, height);
  int rest_index = -1;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    PendingRegion& r = pending[i];
    if (r.geom == PendingRegion::Geom::Unset)
      throw SceneParseError(r.decl_line, "region '" + r.name +
                                             "' has no geometry (rest/rect/disk)");
    if (!r.albedo)
      throw SceneParseError(r.decl_line, "region '" + r.name + "' has no albedo");

    Region region;
    region.name = r.name;
    region.patch = r.patch;
    region.patch.albedo = *r.albedo;
    region.boundary = r.boundary;
    region.mask = EdgeMap(width, height);
    switch (r.geom) {
      case PendingRegion::Geom::Rest:
        if (rest_index >= 0)
          throw SceneParseError(r.decl_line, "only one region may use 'rest'");
        rest_index = static_cast<int>(i);
        break;
      case PendingRegion::Geom::Rect:
        fill_rect(region.mask, r.rect[0], r.rect[1], r.rect[2], r.rect[3]);
        break;
      case PendingRegion::Geom::Disk:
        fill_disk(region.mask, r.disk[0], r.disk[1], r.disk[2]);
        break;
      case PendingRegion::Geom::Unset:
        break;
    }
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        if (region.mask.at(x, y) != 0) claimed.at(x, y) = 1;
    spec.regions.push_back(std::move(region));
  }

  if (rest_index >= 0) {
    EdgeMap& rest_mask = spec.regions[rest_index].mask;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        rest_mask.at(x, y) = claimed.at(x, y) == 0 ? 1 : 0;
  }
  return spec;
}

}  // namespace splicedge
