#include "imagecodec.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

namespace splicedge::cli {

namespace {

cv::Mat decode_8bit(const std::string& path) {
  cv::Mat mat;
  try {
    mat = cv::imread(path, cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception& e) {
    throw InputError("cannot decode " + path + ": " + e.what());
  }
  if (mat.empty()) throw InputError("cannot read " + path);
  if (mat.depth() != CV_8U)
    throw UnsupportedDepthError(path + ": only 8-bit rasters are supported");
  return mat;
}

}  // namespace

Rgb8Image load_rgb8(const std::string& path) {
  cv::Mat mat = decode_8bit(path);
  cv::Mat rgb;
  switch (mat.channels()) {
    case 1:
      cv::cvtColor(mat, rgb, cv::COLOR_GRAY2RGB);
      break;
    case 3:
      cv::cvtColor(mat, rgb, cv::COLOR_BGR2RGB);
      break;
    case 4:
      cv::cvtColor(mat, rgb, cv::COLOR_BGRA2RGB);
      break;
    default:
      throw InputError(path + ": unsupported channel count " +
                       std::to_string(mat.channels()));
  }

  Rgb8Image out(rgb.cols, rgb.rows);
  for (int y = 0; y < rgb.rows; ++y) {
    const std::uint8_t* row = rgb.ptr<std::uint8_t>(y);
    std::copy(row, row + std::size_t(rgb.cols) * 3,
              out.samples.begin() + std::size_t(y) * rgb.cols * 3);
  }
  return out;
}

EdgeMap load_mask(const std::string& path) {
  cv::Mat mat = decode_8bit(path);
  cv::Mat gray;
  switch (mat.channels()) {
    case 1:
      gray = mat;
      break;
    case 3:
      cv::cvtColor(mat, gray, cv::COLOR_BGR2GRAY);
      break;
    case 4:
      cv::cvtColor(mat, gray, cv::COLOR_BGRA2GRAY);
      break;
    default:
      throw InputError(path + ": unsupported channel count " +
                       std::to_string(mat.channels()));
  }

  EdgeMap out(gray.cols, gray.rows);
  for (int y = 0; y < gray.rows; ++y) {
    const std::uint8_t* row = gray.ptr<std::uint8_t>(y);
    for (int x = 0; x < gray.cols; ++x) out.at(x, y) = row[x] > 127 ? 1 : 0;
  }
  return out;
}

void save_rgb8_png(const std::string& path, const Rgb8Image& image) {
  cv::Mat rgb(image.height, image.width, CV_8UC3,
              const_cast<std::uint8_t*>(image.samples.data()));
  cv::Mat bgr;
  cv::cvtColor(rgb, bgr, cv::COLOR_RGB2BGR);
  bool ok = false;
  try {
    ok = cv::imwrite(path, bgr);
  } catch (const cv::Exception& e) {
    throw InputError("cannot write " + path + ": " + e.what());
  }
  if (!ok) throw InputError("cannot write " + path);
}

namespace {

void write_gray(const std::string& path, const cv::Mat& gray) {
  bool ok = false;
  try {
    ok = cv::imwrite(path, gray);
  } catch (const cv::Exception& e) {
    throw InputError("cannot write " + path + ": " + e.what());
  }
  if (!ok) throw InputError("cannot write " + path);
}

}  // namespace

void save_mask_png(const std::string& path, const EdgeMap& map) {
  cv::Mat gray(map.height(), map.width(), CV_8UC1);
  for (int y = 0; y < map.height(); ++y) {
    std::uint8_t* row = gray.ptr<std::uint8_t>(y);
    for (int x = 0; x < map.width(); ++x) row[x] = map.at(x, y) ? 255 : 0;
  }
  write_gray(path, gray);
}

void save_gray8_png(const std::string& path, const Plane<std::uint8_t>& plane) {
  cv::Mat gray(plane.height(), plane.width(), CV_8UC1);
  for (int y = 0; y < plane.height(); ++y) {
    std::uint8_t* row = gray.ptr<std::uint8_t>(y);
    for (int x = 0; x < plane.width(); ++x) row[x] = plane.at(x, y);
  }
  write_gray(path, gray);
}

}  // namespace splicedge::cli
