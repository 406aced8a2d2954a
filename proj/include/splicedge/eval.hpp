#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "splicedge/morphology.hpp"
#include "splicedge/plane.hpp"

namespace splicedge {

/// Tolerant precision/recall over detected vs. ground-truth pixels.
struct PixelScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t matched_true_positives = 0;  // detected pixels with truth nearby
  std::int64_t detected_count = 0;
  std::int64_t truth_count = 0;
};

/// Per-image evaluation row.
struct ImageRow {
  std::string id;
  PixelScore score;
  double br = 0.0;
  bool gate_pass = false;
  std::int64_t ed_sp = 0;  // detected splice pixels
  std::int64_t ed_od = 0;  // detected opponent-space edge pixels
  std::int64_t ed_s = 0;   // ground-truth splice boundary pixels
  std::int64_t n_o = 0;    // pixels in the image
};

struct Aggregates {
  double f1_max = 0.0;
  double f1_mean = 0.0;
  double f1_median = 0.0;
  double br_mean = 0.0;
};

struct RocPoint {
  double alpha = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
};

namespace detail {

inline void require_same_size(const EdgeMap& a, const EdgeMap& b,
                              const char* where) {
  if (!a.same_size(b))
    throw std::invalid_argument(std::string(where) + ": map sizes disagree");
}

/// Count of pixels set in `map` that have a pixel of `targets` within
/// Chebyshev distance tol. Square dilation of the targets is exactly the
/// Chebyshev ball.
inline std::int64_t matched_within(const EdgeMap& map, const EdgeMap& targets,
                                   int tol) {
  const EdgeMap reach = dilate_square(targets, tol);
  std::int64_t n = 0;
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x)
      if (map.at(x, y) != 0 && reach.at(x, y) != 0) ++n;
  return n;
}

}  // namespace detail

/// Distance-tolerant F1: a detected pixel is a true positive iff some truth
/// pixel lies within Chebyshev distance tol, and recall counts truth pixels
/// matched the same way. Empty truth vs. empty detection scores a perfect 1;
/// an empty side against a non-empty one scores 0.
inline PixelScore pixel_f1(const EdgeMap& detected, const EdgeMap& truth,
                           int tol = 2) {
  detail::require_same_size(detected, truth, "pixel_f1");
  if (tol < 0) throw std::invalid_argument("pixel_f1: negative tolerance");

  PixelScore s;
  s.detected_count = count_nonzero(detected);
  s.truth_count = count_nonzero(truth);
  if (s.detected_count == 0 && s.truth_count == 0) {
    s.precision = s.recall = s.f1 = 1.0;
    return s;
  }
  s.matched_true_positives = detail::matched_within(detected, truth, tol);
  const std::int64_t matched_truth = detail::matched_within(truth, detected, tol);
  s.precision = s.detected_count > 0
                    ? double(s.matched_true_positives) / double(s.detected_count)
                    : 0.0;
  s.recall = s.truth_count > 0 ? double(matched_truth) / double(s.truth_count)
                               : 0.0;
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

/// Fraction of truth boundary pixels with a detected pixel within Chebyshev
/// distance tol. Empty truth scores 1 (nothing was missed).
inline double boundary_recall(const EdgeMap& detected, const EdgeMap& truth,
                              int tol = 2) {
  detail::require_same_size(detected, truth, "boundary_recall");
  if (tol < 0) throw std::invalid_argument("boundary_recall: negative tolerance");
  const std::int64_t total = count_nonzero(truth);
  if (total == 0) return 1.0;
  return double(detail::matched_within(truth, detected, tol)) / double(total);
}

/// Acceptance gate on boundary recall, non-strict.
inline bool gate(double br, double theta) { return br >= theta; }

/// Per-image detection score: the splice fraction of detected opponent-space
/// edges.
inline double splice_score(std::int64_t ed_sp, std::int64_t ed_od) {
  return double(ed_sp) / double(std::max<std::int64_t>(1, ed_od));
}

/// Sweep a decision threshold over a uniform 101-point grid in [0,1]; at each
/// alpha, TPR is the fraction of spliced-image scores strictly above alpha and
/// FPR the same fraction of original-image scores.
inline std::vector<RocPoint> roc_curve(const std::vector<double>& spliced_scores,
                                       const std::vector<double>& original_scores) {
  if (spliced_scores.empty() || original_scores.empty())
    throw std::invalid_argument("roc_curve: score lists must be non-empty");
  std::vector<RocPoint> points;
  points.reserve(101);
  for (int i = 0; i <= 100; ++i) {
    RocPoint p;
    p.alpha = double(i) / 100.0;
    std::int64_t tp = 0, fp = 0;
    for (double s : spliced_scores) tp += s > p.alpha;
    for (double s : original_scores) fp += s > p.alpha;
    p.tpr = double(tp) / double(spliced_scores.size());
    p.fpr = double(fp) / double(original_scores.size());
    points.push_back(p);
  }
  return points;
}

/// Area under the ROC curve by trapezoidal integration over FPR, with the
/// (0,0) and (1,1) corners pinned.
inline double roc_auc(const std::vector<RocPoint>& points) {
  std::vector<std::pair<double, double>> pts;  // (fpr, tpr)
  pts.reserve(points.size() + 2);
  pts.emplace_back(0.0, 0.0);
  for (const auto& p : points) pts.emplace_back(p.fpr, p.tpr);
  pts.emplace_back(1.0, 1.0);
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    area += (pts[i].first - pts[i - 1].first) *
            (pts[i].second + pts[i - 1].second) / 2.0;
  return area;
}

/// Dataset-level statistics of the per-image rows. Median of an even count is
/// the mean of the two middle values.
inline Aggregates aggregate(const std::vector<ImageRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("aggregate: no rows");
  std::vector<double> f1s;
  f1s.reserve(rows.size());
  double f1_sum = 0.0, br_sum = 0.0;
  for (const auto& row : rows) {
    f1s.push_back(row.score.f1);
    f1_sum += row.score.f1;
    br_sum += row.br;
  }
  std::sort(f1s.begin(), f1s.end());

  Aggregates a;
  a.f1_max = f1s.back();
  a.f1_mean = f1_sum / double(rows.size());
  const std::size_t n = f1s.size();
  a.f1_median = n % 2 == 1 ? f1s[n / 2] : (f1s[n / 2 - 1] + f1s[n / 2]) / 2.0;
  a.br_mean = br_sum / double(rows.size());
  return a;
}

/// Mean F1 as a function of the gate threshold: an image whose boundary
/// recall fails the gate contributes 0 at that theta.
inline std::vector<std::pair<double, double>> gated_f1_curve(
    const std::vector<ImageRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("gated_f1_curve: no rows");
  std::vector<std::pair<double, double>> curve;
  curve.reserve(101);
  for (int i = 0; i <= 100; ++i) {
    const double theta = double(i) / 100.0;
    double sum = 0.0;
    for (const auto& row : rows)
      if (gate(row.br, theta)) sum += row.score.f1;
    curve.emplace_back(theta, sum / double(rows.size()));
  }
  return curve;
}

}  // namespace splicedge
