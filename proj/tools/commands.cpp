#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "splicedge/classify.hpp"
#include "splicedge/colorspace.hpp"
#include "splicedge/eval.hpp"
#include "splicedge/scene_text.hpp"
#include "splicedge/simulate.hpp"

#include "dataset.hpp"
#include "imagecodec.hpp"

namespace splicedge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

json config_json(const RunConfig& config) {
  return json{{"dilate_s", config.dilate_s},
              {"tol", config.tol},
              {"theta", config.theta},
              {"linearize", config.linearize},
              {"emit_intermediates", config.emit_intermediates},
              {"layout", config.layout_path.empty() ? "default"
                                                    : config.layout_path}};
}

fs::path ensure_out_dir(const RunConfig& config) {
  const fs::path dir = config.out_dir.empty() ? fs::path(".")
                                              : fs::path(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec && !fs::is_directory(dir))
    throw InputError("cannot create output directory " + dir.string());
  return dir;
}

RgbImage load_working_image(const std::string& path, const RunConfig& config) {
  const RgbImage decoded = from_8bit(load_rgb8(path));
  return config.linearize ? linearize_srgb(decoded) : decoded;
}

DetectionResult run_detector(const RgbImage& image, const RunConfig& config) {
  DetectParams params;
  params.dilate_s = config.dilate_s;
  return detect(image, params);
}

Rgb8Image make_overlay(const Rgb8Image& base, const EdgeMap& splice_map) {
  Rgb8Image out = base;
  for (int y = 0; y < splice_map.height(); ++y)
    for (int x = 0; x < splice_map.width(); ++x)
      if (splice_map.at(x, y) != 0) {
        const std::size_t i =
            (std::size_t(y) * splice_map.width() + x) * 3;
        out.samples[i] = 255;
        out.samples[i + 1] = 0;
        out.samples[i + 2] = 0;
      }
  return out;
}

std::string format4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw InputError("cannot write " + path.string());
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.dilate_s < 0)
    throw std::invalid_argument("--dilate-s must be non-negative");
  if (config.tol < 0) throw std::invalid_argument("--tol must be non-negative");
  if (!(config.theta >= 0.0 && config.theta <= 1.0))
    throw std::invalid_argument("--theta must lie in [0, 1]");
}

std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SPLICEDGE_OUT_DIR"); env && *env)
    return env;
  return ".";
}

int cmd_detect(const std::string& image_path, const RunConfig& config) {
  const fs::path out_dir = ensure_out_dir(config);
  const Rgb8Image raw = load_rgb8(image_path);
  const RgbImage image =
      config.linearize ? linearize_srgb(from_8bit(raw)) : from_8bit(raw);
  const DetectionResult result = run_detector(image, config);

  const std::string stem = fs::path(image_path).stem().string();
  const fs::path mask_path = out_dir / (stem + "_splice.png");
  const fs::path overlay_path = out_dir / (stem + "_overlay.png");
  save_mask_png(mask_path.string(), result.splice_map);
  save_rgb8_png(overlay_path.string(), make_overlay(raw, result.splice_map));
  if (config.emit_intermediates) {
    save_mask_png((out_dir / (stem + "_s_edges.png")).string(),
                  result.s_edges);
    save_mask_png((out_dir / (stem + "_o_edges.png")).string(),
                  result.o_edges);
  }

  std::cout << stem << ": " << count_nonzero(result.splice_map)
            << " splice pixels of " << result.splice_map.pixel_count()
            << "; wrote " << mask_path.string() << " and "
            << overlay_path.string() << "\n";
  return 0;
}

int cmd_eval(const std::string& dataset_root, const RunConfig& config) {
  const fs::path out_dir = ensure_out_dir(config);
  const DatasetLayout layout = config.layout_path.empty()
                                   ? DatasetLayout{}
                                   : load_layout(config.layout_path);
  const DatasetScan scan = scan_dataset(dataset_root, layout);

  std::vector<ImageRow> spliced_rows;
  std::vector<json> row_json;
  std::vector<json> skipped;
  std::vector<double> spliced_scores, original_scores;

  for (const auto& item : scan.spliced) {
    if (item.mask.empty()) {
      skipped.push_back({{"id", item.id}, {"reason", "no mask found"}});
      continue;
    }
    const RgbImage image = load_working_image(item.image.string(), config);
    const EdgeMap region = load_mask(item.mask.string());
    if (region.width() != image.width() || region.height() != image.height()) {
      skipped.push_back(
          {{"id", item.id}, {"reason", "mask/image dimension mismatch"}});
      continue;
    }
    const EdgeMap truth = ground_truth_boundary(region);
    const DetectionResult det = run_detector(image, config);

    ImageRow row;
    row.id = item.id;
    row.score = pixel_f1(det.splice_map, truth, config.tol);
    row.br = boundary_recall(det.splice_map, truth, config.tol);
    row.gate_pass = gate(row.br, config.theta);
    row.ed_sp = count_nonzero(det.splice_map);
    row.ed_od = count_nonzero(det.o_edges);
    row.ed_s = count_nonzero(truth);
    row.n_o = std::int64_t(image.width()) * image.height();
    spliced_rows.push_back(row);
    spliced_scores.push_back(splice_score(row.ed_sp, row.ed_od));

    row_json.push_back({{"id", row.id},
                        {"spliced", true},
                        {"precision", row.score.precision},
                        {"recall", row.score.recall},
                        {"f1", row.score.f1},
                        {"br", row.br},
                        {"gate_pass", row.gate_pass},
                        {"ed_sp", row.ed_sp},
                        {"ed_od", row.ed_od},
                        {"ed_s", row.ed_s},
                        {"n_o", row.n_o},
                        {"score", spliced_scores.back()}});
  }

  for (const auto& path : scan.originals) {
    const RgbImage image = load_working_image(path.string(), config);
    const DetectionResult det = run_detector(image, config);
    const std::int64_t ed_sp = count_nonzero(det.splice_map);
    const std::int64_t ed_od = count_nonzero(det.o_edges);
    original_scores.push_back(splice_score(ed_sp, ed_od));
    row_json.push_back({{"id", path.stem().string()},
                        {"spliced", false},
                        {"ed_sp", ed_sp},
                        {"ed_od", ed_od},
                        {"n_o", std::int64_t(image.width()) * image.height()},
                        {"score", original_scores.back()}});
  }

  json report{{"schema_version", kSchemaVersion},
              {"tool", "splicedge"},
              {"config", config_json(config)},
              {"dataset_root", dataset_root},
              {"rows", row_json},
              {"skipped", skipped},
              {"counts",
               {{"spliced_listed", scan.spliced.size()},
                {"spliced_scored", spliced_rows.size()},
                {"originals", scan.originals.size()},
                {"skipped", skipped.size()}}}};

  std::ostringstream summary;
  summary << "splicedge evaluation summary (schema " << kSchemaVersion
          << ")\n";
  summary << "dataset: " << dataset_root << "\n";
  summary << "images: " << scan.spliced.size() << " spliced ("
          << spliced_rows.size() << " scored, " << skipped.size()
          << " skipped), " << scan.originals.size() << " original\n\n";

  if (!spliced_rows.empty()) {
    const Aggregates agg = aggregate(spliced_rows);
    report["aggregates"] = {{"f1_max", agg.f1_max},
                            {"f1_mean", agg.f1_mean},
                            {"f1_median", agg.f1_median},
                            {"br_mean", agg.br_mean}};

    std::vector<json> gated;
    for (const auto& [theta, mean_f1] : gated_f1_curve(spliced_rows))
      gated.push_back({{"theta", theta}, {"f1_mean", mean_f1}});
    report["gated_f1"] = gated;

    int gate_passes = 0;
    for (const auto& row : spliced_rows) gate_passes += row.gate_pass;

    summary << "F1_Max     F1_Mean    F1_Median  BR_Mean\n";
    summary << format4(agg.f1_max) << "     " << format4(agg.f1_mean)
            << "     " << format4(agg.f1_median) << "     "
            << format4(agg.br_mean) << "\n\n";
    summary << "gate: boundary recall >= " << format4(config.theta)
            << " passed by " << gate_passes << "/" << spliced_rows.size()
            << " spliced images\n";
  }

  if (!spliced_scores.empty() && !original_scores.empty()) {
    const auto curve = roc_curve(spliced_scores, original_scores);
    std::vector<json> roc;
    for (const auto& p : curve)
      roc.push_back({{"alpha", p.alpha}, {"tpr", p.tpr}, {"fpr", p.fpr}});
    report["roc"] = roc;
    report["auc"] = roc_auc(curve);
    summary << "ROC AUC (score threshold sweep): " << format4(roc_auc(curve))
            << "\n";
  }

  const fs::path report_path = out_dir / "report.json";
  const fs::path summary_path = out_dir / "summary.txt";
  write_text_file(report_path, report.dump(2) + "\n");
  write_text_file(summary_path, summary.str());

  std::cout << summary.str();
  std::cout << "wrote " << report_path.string() << " and "
            << summary_path.string() << "\n";
  return 0;
}

int cmd_simulate(const std::string& scene_path, const RunConfig& config) {
  const fs::path out_dir = ensure_out_dir(config);

  std::ifstream in(scene_path, std::ios::binary);
  if (!in) throw InputError("cannot read " + scene_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();

  const SceneSpec spec = parse_scene(buffer.str());
  const RenderResult rendered = render(spec);

  const fs::path image_path = out_dir / "image.png";
  const fs::path boundary_path = out_dir / "boundary.png";
  const fs::path classes_path = out_dir / "classes.png";
  save_rgb8_png(image_path.string(), quantize_to_8bit(rendered.image));
  save_mask_png(boundary_path.string(), rendered.truth.boundary);
  save_gray8_png(classes_path.string(), rendered.truth.classes);

  json legend = json::object();
  for (int c = int(BoundaryClass::None); c <= int(BoundaryClass::Splice); ++c)
    legend[std::to_string(c)] = to_string(BoundaryClass(c));

  std::vector<json> regions;
  for (const auto& region : spec.regions)
    regions.push_back(
        {{"name", region.name}, {"boundary", to_string(region.boundary)}});

  json annotations{{"schema_version", kSchemaVersion},
                   {"config", config_json(config)},
                   {"scene", scene_path},
                   {"width", spec.width},
                   {"height", spec.height},
                   {"illuminant", spec.illuminant},
                   {"clipped", rendered.clipped},
                   {"class_ids", legend},
                   {"regions", regions},
                   {"boundary_pixels", count_nonzero(rendered.truth.boundary)}};
  write_text_file(out_dir / "annotations.json", annotations.dump(2) + "\n");

  std::cout << "rendered " << spec.width << "x" << spec.height << " scene to "
            << image_path.string() << " ("
            << count_nonzero(rendered.truth.boundary)
            << " boundary pixels)\n";
  return 0;
}

}  // namespace splicedge::cli
