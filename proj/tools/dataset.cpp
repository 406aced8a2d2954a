#include "dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "imagecodec.hpp"

namespace splicedge::cli {

namespace fs = std::filesystem;

namespace {

bool is_image_file(const fs::path& p) {
  static const std::array<const char*, 8> exts{
      ".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff", ".ppm", ".pgm"};
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return std::find(exts.begin(), exts.end(), ext) != exts.end();
}

std::vector<fs::path> sorted_images(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && is_image_file(entry.path()))
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

fs::path find_mask(const fs::path& masks_dir, const std::string& stem,
                   const std::string& suffix, const fs::path& image_ext) {
  std::vector<std::string> exts{image_ext.string(), ".png", ".bmp",
                                ".tif",             ".tiff", ".pgm",
                                ".ppm",             ".jpg",  ".jpeg"};
  for (const auto& ext : exts) {
    const fs::path candidate = masks_dir / (stem + suffix + ext);
    if (fs::is_regular_file(candidate)) return candidate;
  }
  return {};
}

}  // namespace

DatasetLayout load_layout(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read layout file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse layout file " + path + ": " + e.what());
  }
  if (!doc.is_object())
    throw InputError("layout file " + path + ": expected a JSON object");

  DatasetLayout layout;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string())
      throw InputError("layout file " + path + ": key \"" + key +
                       "\" must be a string");
    if (key == "spliced_dir")
      layout.spliced_dir = value.get<std::string>();
    else if (key == "masks_dir")
      layout.masks_dir = value.get<std::string>();
    else if (key == "originals_dir")
      layout.originals_dir = value.get<std::string>();
    else if (key == "mask_suffix")
      layout.mask_suffix = value.get<std::string>();
    else
      throw InputError("layout file " + path + ": unknown key \"" + key +
                       "\"");
  }
  return layout;
}

DatasetScan scan_dataset(const fs::path& root, const DatasetLayout& layout) {
  if (!fs::is_directory(root))
    throw InputError("dataset root " + root.string() + " is not a directory");

  DatasetScan scan;
  const fs::path masks_dir = root / layout.masks_dir;
  for (const auto& image : sorted_images(root / layout.spliced_dir)) {
    DatasetItem item;
    item.id = image.stem().string();
    item.image = image;
    item.mask = find_mask(masks_dir, item.id, layout.mask_suffix,
                          image.extension());
    scan.spliced.push_back(std::move(item));
  }
  scan.originals = sorted_images(root / layout.originals_dir);

  if (scan.spliced.empty() && scan.originals.empty())
    throw InputError("dataset root " + root.string() +
                     " contains no images under \"" + layout.spliced_dir +
                     "\" or \"" + layout.originals_dir + "\"");
  return scan;
}

}  // namespace splicedge::cli
