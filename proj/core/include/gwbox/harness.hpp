#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "gwbox/geometry.hpp"

namespace gwbox {

/// One synthetic ground-truth object.
struct SyntheticGt {
    int class_id = 0;
    Box box;
};

/// One synthetic detection: a noisy copy of its source ground truth, with the
/// true perturbation scale recorded in all four sigma slots.
struct SyntheticDet {
    int class_id = 0;
    double score = 0.0;
    Box box;
    std::array<double, 4> sigma{};
    std::size_t source_gt = 0;
};

struct SyntheticScene {
    std::vector<SyntheticGt> gts;
    std::vector<SyntheticDet> dets;
};

/// Deterministic synthetic scene generator. Ground-truth boxes have sizes in
/// [0.05, 0.5] and lie inside the unit frame; each detection perturbs one
/// ground truth with Gaussian noise whose per-detection scale is drawn from
/// [0.005, noise_level] (noise_level below 0.005 is used directly, so a zero
/// level produces exact copies). Scores rise with the achieved overlap.
std::vector<SyntheticScene> gen_synthetic(std::uint64_t seed, std::size_t n_scenes,
                                          std::size_t dets_per_scene,
                                          double noise_level);

/// Paired samples and rank statistics of the calibration experiment.
struct CalibrationStats {
    std::vector<double> uncertainty;
    std::vector<double> combined;
    std::vector<double> one_minus_iou;
    double spearman_uncertainty_error = 0.0;   // rank corr(uncertainty, 1 - IoU)
    double spearman_combined_uncertainty = 0.0;  // rank corr(combined, uncertainty)
};

/// For every detection computes the localization uncertainty (from its
/// recorded sigma), the combined metric against its source ground truth, and
/// 1 - IoU, then returns both Spearman correlations over the paired lists.
/// Requires at least 30 detections; throws DegenerateRanks if any variable is
/// constant (e.g. a zero-noise dataset). `threads` caps the per-detection
/// parallelism and never changes the result.
CalibrationStats calibration_experiment(const std::vector<SyntheticScene>& scenes,
                                        std::size_t k, unsigned threads = 1);

/// Spearman rank correlation with average ranks for ties.
/// Throws DegenerateRanks when either variable is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// A ground truth with two predictions that the overlap metrics cannot tell
/// apart while the Gromov-Wasserstein distance can.
struct CounterexamplePair {
    Box gt;
    Box pred_a;
    Box pred_b;
    double giou_gap = 0.0;
    double ciou_gap = 0.0;
    double gw_gap = 0.0;
};

/// Searches for a triple with |GIoU gaps| and |CIoU gaps| below tol while the
/// GW^2 gap exceeds min_gap. Prediction covariances are Diag(w^2/4, h^2/4,
/// eps, eps) with eps = 1e-3. Trials begin with an analytic family of nested
/// concentric squares (containment plus shared center and aspect ratio blind
/// every IoU variant) before random sampling; each candidate consumes one
/// trial. Throws NoneFound when max_trials is exhausted.
CounterexamplePair counterexample_search(std::uint64_t seed, double tol,
                                         double min_gap, std::size_t max_trials);

/// 2D histogram with explicit bin edges. Bins are half-open [lo, hi) except
/// the last bin in each axis, which also includes the final edge.
struct HeatmapGrid {
    std::vector<double> x_edges;
    std::vector<double> y_edges;
    std::vector<std::vector<std::uint64_t>> counts;  // counts[xi][yi]
    std::uint64_t dropped = 0;
};

HeatmapGrid heatmap_bins(const std::vector<std::pair<double, double>>& pairs,
                         std::size_t x_bins, std::size_t y_bins, double x_lo,
                         double x_hi, double y_lo, double y_hi);

/// Scored detection for the evaluator.
struct ScoredBox {
    double score = 0.0;
    Box box;
};

/// Single-threshold average precision: detections greedily match the best
/// still-free ground truth at IoU >= threshold in descending score order, and
/// the all-point interpolated area under the precision-recall curve is
/// returned. Empty inputs give 0.
double average_precision(const std::vector<ScoredBox>& dets,
                         const std::vector<Box>& gts, double iou_threshold);

/// Grouped variant: the ranking is global but a detection may only match
/// ground truths in its own group (e.g. the same image).
double average_precision(const std::vector<std::pair<std::size_t, ScoredBox>>& dets,
                         const std::vector<std::pair<std::size_t, Box>>& gts,
                         double iou_threshold);

}  // namespace gwbox
