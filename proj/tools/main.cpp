#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "splicedge/scene_text.hpp"

#include "commands.hpp"
#include "imagecodec.hpp"

int main(int argc, char** argv) {
  using namespace splicedge;
  using namespace splicedge::cli;

  CLI::App app{
      "splicedge: locate splicing edges by comparing edge maps across "
      "shading-blind and highlight-blind color spaces"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_flag, image_path, dataset_root, scene_path;

  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_flag,
                    "output directory (default: $SPLICEDGE_OUT_DIR, else .)");
  };
  const auto add_detect_knobs = [&](CLI::App* cmd) {
    cmd->add_option("--dilate-s", config.dilate_s,
                    "dilation radius applied to the shading-space edge map "
                    "before suppression (default 0)");
    cmd->add_flag("--linearize", config.linearize,
                  "undo the sRGB transfer curve before detection");
  };

  CLI::App* det = app.add_subcommand(
      "detect", "detect splicing edges in one image and write masks");
  det->add_option("image", image_path, "input 8-bit raster")->required();
  add_detect_knobs(det);
  det->add_flag("--emit-intermediates", config.emit_intermediates,
                "also write the per-space edge masks");
  add_out(det);

  CLI::App* ev = app.add_subcommand(
      "eval", "run the detector over a dataset and write a report");
  ev->add_option("dataset", dataset_root, "dataset root directory")
      ->required();
  add_detect_knobs(ev);
  ev->add_option("--tol", config.tol,
                 "pixel tolerance for F1 and boundary recall (default 2)");
  ev->add_option("--theta", config.theta,
                 "boundary-recall gate threshold (default 0.3)");
  ev->add_option("--layout", config.layout_path,
                 "JSON layout-mapping file for non-default dataset trees");
  add_out(ev);

  CLI::App* sim = app.add_subcommand(
      "simulate", "render a scene description with ground-truth boundaries");
  sim->add_option("scene", scene_path, "scene description file")->required();
  add_out(sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  config.out_dir = resolve_out_dir(out_flag);

  try {
    validate(config);
    if (det->parsed()) return cmd_detect(image_path, config);
    if (ev->parsed()) return cmd_eval(dataset_root, config);
    return cmd_simulate(scene_path, config);
  } catch (const SceneParseError& e) {
    std::cerr << "error: " << scene_path << ": " << e.what() << "\n";
    return 4;
  } catch (const UnsupportedDepthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
