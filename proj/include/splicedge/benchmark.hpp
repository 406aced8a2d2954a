#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "splicedge/plane.hpp"
#include "splicedge/simulate.hpp"

namespace splicedge {

/// Uniform sampling on top of the (bit-portable) mt19937_64 stream; the
/// mapping to doubles is spelled out here so suites reproduce across
/// standard libraries.
class SceneRng {
 public:
  explicit SceneRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    return lo + int(engine_() % std::uint64_t(hi - lo + 1));
  }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// One synthetic benchmark case, already passed through 8-bit quantization so
/// the detector sees the same integer pipeline as decoded files.
struct BenchmarkImage {
  RgbImage image;
  EdgeMap splice_boundary;  // all-zero for originals
  bool spliced = false;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Chromatic coordinates of an albedo triple, the quantities the opponent
/// space responds to.
inline std::pair<double, double> chroma(const std::array<double, 3>& k) {
  return {(k[0] - k[1]) / 2.0, (2.0 * k[2] - k[0] - k[1]) / 4.0};
}

inline double chroma_norm(const std::array<double, 3>& k) {
  auto [c1, c2] = chroma(k);
  return std::hypot(c1, c2);
}

inline double chroma_distance(const std::array<double, 3>& a,
                              const std::array<double, 3>& b) {
  auto [a1, a2] = chroma(a);
  auto [b1, b2] = chroma(b);
  return std::hypot(a1 - b1, a2 - b2);
}

inline double saturation_of(const std::array<double, 3>& k) {
  const double sum = k[0] + k[1] + k[2];
  return sum == 0.0 ? 0.0 : 1.0 - std::min({k[0], k[1], k[2]}) / sum;
}

inline std::array<double, 3> sample_albedo(SceneRng& rng, double lo, double hi) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

struct DiskSpot {
  double cx = 0, cy = 0, r = 0;
};

inline bool disks_apart(const DiskSpot& a, const DiskSpot& b, double margin) {
  return std::hypot(a.cx - b.cx, a.cy - b.cy) > a.r + b.r + margin;
}

}  // namespace detail

/// Generate one benchmark case. Hosts carry a smooth body-reflection ramp, a
/// few material patches and sometimes a highlight spot; splices paste donor
/// content with the host's own albedo but different shading geometry, so only
/// the opponent space reacts at the paste boundary.
inline BenchmarkImage make_benchmark_image(std::uint64_t seed, bool spliced,
                                           int width = 256, int height = 256) {
  SceneRng rng(detail::splitmix64(seed));

  // Background albedo with enough chroma for the paste boundary to register.
  std::array<double, 3> bg_albedo{};
  do {
    bg_albedo = detail::sample_albedo(rng, 0.15, 0.85);
  } while (detail::chroma_norm(bg_albedo) < 0.3);

  const bool ramp_along_x = rng.chance(0.5);
  const double body_a = rng.uniform(0.78, 0.92);
  const double body_b = rng.uniform(0.92, 1.0);
  const ScalarField host_body = ramp_along_x
                                    ? ScalarField::ramp_x(body_a, body_b)
                                    : ScalarField::ramp_y(body_a, body_b);

  // Paste disk placed with a frame margin; sampled even for originals so the
  // two populations share one scene distribution.
  const double paste_r = rng.uniform(0.14, 0.20) * std::min(width, height);
  detail::DiskSpot paste;
  paste.r = paste_r;
  paste.cx = rng.uniform(paste_r + 8.0, width - paste_r - 8.0);
  paste.cy = rng.uniform(paste_r + 8.0, height - paste_r - 8.0);

  // Material patches: fully outside the paste disk, pairwise disjoint,
  // S-visible and with bounded opponent contrast. Every scene must end up
  // with real material edges: without them the per-space thresholds drop to
  // the quantization staircase of the shading ramp, whose column artifacts
  // do not align across spaces. The relaxed second window keeps rare
  // hard-to-match backgrounds from producing patchless scenes.
  std::vector<detail::DiskSpot> spots;
  std::vector<std::array<double, 3>> patch_albedos;
  const int want_patches = rng.uniform_int(2, 4);
  for (int guard = 0; int(spots.size()) < want_patches && guard < 400;
       ++guard) {
    detail::DiskSpot s;
    s.r = rng.uniform(16.0, 28.0);
    s.cx = rng.uniform(s.r + 8.0, width - s.r - 8.0);
    s.cy = rng.uniform(s.r + 8.0, height - s.r - 8.0);
    if (!detail::disks_apart(s, paste, 8.0)) continue;
    bool clear = true;
    for (const auto& other : spots)
      if (!detail::disks_apart(s, other, 6.0)) clear = false;
    if (!clear) continue;
    std::array<double, 3> albedo{};
    bool found = false;
    for (int t = 0; t < 400 && !found; ++t) {
      albedo = detail::sample_albedo(rng, 0.1, 0.9);
      const double ds =
          std::abs(detail::saturation_of(albedo) - detail::saturation_of(bg_albedo));
      const double dc = detail::chroma_distance(albedo, bg_albedo);
      found = ds >= 0.10 && dc >= 0.07 && dc <= 0.13;
    }
    for (int t = 0; t < 400 && !found; ++t) {
      albedo = detail::sample_albedo(rng, 0.1, 0.9);
      const double ds =
          std::abs(detail::saturation_of(albedo) - detail::saturation_of(bg_albedo));
      const double dc = detail::chroma_distance(albedo, bg_albedo);
      found = ds >= 0.08 && dc >= 0.05 && dc <= 0.20;
    }
    if (!found) continue;
    spots.push_back(s);
    patch_albedos.push_back(albedo);
  }

  // Optional highlight spot: background albedo, body unchanged, pure
  // interface-reflection step at its rim.
  bool with_highlight = rng.chance(0.5);
  detail::DiskSpot gleam;
  double gleam_gain = 0.0;
  if (with_highlight) {
    with_highlight = false;
    for (int attempt = 0; attempt < 60; ++attempt) {
      gleam.r = rng.uniform(14.0, 22.0);
      gleam.cx = rng.uniform(gleam.r + 8.0, width - gleam.r - 8.0);
      gleam.cy = rng.uniform(gleam.r + 8.0, height - gleam.r - 8.0);
      bool clear = detail::disks_apart(gleam, paste, 8.0);
      for (const auto& other : spots)
        if (!detail::disks_apart(gleam, other, 6.0)) clear = false;
      if (clear) {
        with_highlight = true;
        gleam_gain = rng.uniform(0.08, 0.14);
        break;
      }
    }
  }

  SceneSpec host;
  host.width = width;
  host.height = height;
  host.illuminant = 1.0;
  {
    Region bg;
    bg.name = "background";
    bg.mask = EdgeMap(width, height, 1);
    bg.patch.albedo = bg_albedo;
    bg.patch.body = host_body;
    host.regions.push_back(std::move(bg));
  }
  EdgeMap& bg_mask = host.regions[0].mask;
  for (std::size_t i = 0; i < spots.size(); ++i) {
    Region patch;
    patch.name = "patch" + std::to_string(i);
    patch.mask = EdgeMap(width, height);
    fill_disk(patch.mask, spots[i].cx, spots[i].cy, spots[i].r);
    patch.patch.albedo = patch_albedos[i];
    patch.patch.body = host_body;
    patch.boundary = BoundaryClass::Material;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        if (patch.mask.at(x, y) != 0) bg_mask.at(x, y) = 0;
    host.regions.push_back(std::move(patch));
  }
  if (with_highlight) {
    Region shine;
    shine.name = "highlight";
    shine.mask = EdgeMap(width, height);
    fill_disk(shine.mask, gleam.cx, gleam.cy, gleam.r);
    shine.patch.albedo = bg_albedo;
    shine.patch.body = host_body;
    shine.patch.specular = ScalarField::constant(1.0);
    shine.patch.specular_coeff = gleam_gain;
    shine.boundary = BoundaryClass::Highlight;
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        if (shine.mask.at(x, y) != 0) bg_mask.at(x, y) = 0;
    host.regions.push_back(std::move(shine));
  }

  const RgbImage host_img = render(host).image;

  BenchmarkImage out;
  out.spliced = spliced;
  if (!spliced) {
    out.image = from_8bit(quantize_to_8bit(host_img));
    out.splice_boundary = EdgeMap(width, height);
    return out;
  }

  // Donor: same albedo, different shading geometry. Scaling the donor's body
  // gain well below the host's ramp floor keeps the shading contrast at the
  // paste boundary above threshold all the way around the disk.
  const double body_scale = rng.uniform(0.35, 0.5);
  SceneSpec donor;
  donor.width = width;
  donor.height = height;
  donor.illuminant = 1.0;
  {
    Region bg;
    bg.name = "donor";
    bg.mask = EdgeMap(width, height, 1);
    bg.patch.albedo = bg_albedo;
    bg.patch.body = ramp_along_x
                        ? ScalarField::ramp_y(body_b * body_scale, body_a * body_scale)
                        : ScalarField::ramp_x(body_b * body_scale, body_a * body_scale);
    donor.regions.push_back(std::move(bg));
  }
  const RgbImage donor_img = render(donor).image;

  EdgeMap paste_mask(width, height);
  fill_disk(paste_mask, paste.cx, paste.cy, paste.r);
  const SpliceResult splice = make_splice(host_img, donor_img, paste_mask);

  out.image = from_8bit(quantize_to_8bit(splice.image));
  out.splice_boundary = splice.truth.boundary;
  return out;
}

/// Reproducible suite: the first n_spliced cases are splices, the rest
/// originals; every case derives its own stream from the master seed.
inline std::vector<BenchmarkImage> make_benchmark_suite(
    int n_spliced, int n_original, int width = 256, int height = 256,
    std::uint64_t master_seed = 0x5eedc0ffee123ULL) {
  std::vector<BenchmarkImage> suite;
  suite.reserve(std::size_t(n_spliced) + std::size_t(n_original));
  for (int i = 0; i < n_spliced; ++i)
    suite.push_back(make_benchmark_image(master_seed ^ (0x10000ULL + i), true,
                                         width, height));
  for (int i = 0; i < n_original; ++i)
    suite.push_back(make_benchmark_image(master_seed ^ (0x20000ULL + i), false,
                                         width, height));
  return suite;
}

}  // namespace splicedge
