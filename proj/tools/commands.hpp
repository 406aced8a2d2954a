#pragma once

#include <string>

namespace splicedge::cli {

/// Everything that influences a run's numbers. The full config is embedded
/// in every report so results are reproducible from the file alone.
struct RunConfig {
  int dilate_s = 0;        // radius for widening the shading-space edge map
  int tol = 2;             // pixel tolerance for F1 and boundary recall
  double theta = 0.3;      // boundary-recall gate threshold
  bool linearize = false;  // undo the sRGB transfer curve before detection
  bool emit_intermediates = false;  // also write per-space edge masks
  std::string out_dir;     // resolved output directory
  std::string layout_path;  // optional dataset layout-mapping file
};

/// Throws std::invalid_argument when a parameter is out of range.
void validate(const RunConfig& config);

/// Resolve the output directory: an explicit --out wins, then the
/// SPLICEDGE_OUT_DIR environment variable, then the current directory.
std::string resolve_out_dir(const std::string& flag_value);

int cmd_detect(const std::string& image_path, const RunConfig& config);
int cmd_eval(const std::string& dataset_root, const RunConfig& config);
int cmd_simulate(const std::string& scene_path, const RunConfig& config);

}  // namespace splicedge::cli
