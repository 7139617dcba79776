#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "gwbox/gauss.hpp"

namespace gwbox {

/// 95% confidence interval of one predicted component: [mu - 1.96 s, mu + 1.96 s].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Localization uncertainty of one detection. uncertainty is exactly
/// 1 - avg_top5_iou; combined_metric is filled by callers that also know the
/// classification score and the IoU against a ground truth.
struct UncertaintyReport {
    double uncertainty = 0.0;
    double avg_top5_iou = 0.0;
    std::size_t k = 0;
    std::optional<double> combined_metric;
};

std::array<Interval, 4> confidence_intervals(const GaussPred4& p);

/// Quantifies localization uncertainty from the confidence intervals:
/// each of the four intervals is divided into k equal parts, candidate i takes
/// the midpoint of subinterval i in every dimension simultaneously, candidate
/// sizes are clamped to >= 1e-6, and the uncertainty is one minus the mean of
/// the five largest IoUs between the prediction and its candidates (ties
/// broken toward smaller candidate index). Throws KTooSmall if k < 5.
UncertaintyReport localization_uncertainty(const GaussPred4& p, std::size_t k);

/// Joint score/overlap quality s * sqrt(u) in [0, 1].
double combined_metric(double score, double iou_value);

}  // namespace gwbox
