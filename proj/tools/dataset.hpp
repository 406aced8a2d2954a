#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace splicedge::cli {

/// Where spliced images, their region masks, and untouched originals live
/// under the dataset root. The defaults describe the layout documented in
/// the README; a JSON layout file adapts other directory trees.
struct DatasetLayout {
  std::string spliced_dir = "spliced";
  std::string masks_dir = "masks";
  std::string originals_dir = "originals";
  std::string mask_suffix;  // appended to the image stem, e.g. "_edgemask"
};

/// Parse a layout-mapping JSON file. Unknown keys are rejected so typos do
/// not silently fall back to defaults.
DatasetLayout load_layout(const std::string& path);

struct DatasetItem {
  std::string id;  // image stem, the report row key
  std::filesystem::path image;
  std::filesystem::path mask;  // empty when no mask was found
};

struct DatasetScan {
  std::vector<DatasetItem> spliced;               // sorted by id
  std::vector<std::filesystem::path> originals;   // sorted by filename
};

/// Enumerate a dataset root. Spliced images without a matching mask are
/// still listed (with an empty mask path) so the caller can count and
/// report them as skipped. Throws InputError when the root holds no images
/// at all.
DatasetScan scan_dataset(const std::filesystem::path& root,
                         const DatasetLayout& layout);

}  // namespace splicedge::cli
