#include "gwbox/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gwbox/errors.hpp"
#include "gwbox/geometry.hpp"

namespace gwbox {

namespace {

constexpr double kZ95 = 1.96;
constexpr double kMinCandidateSize = 1e-6;

}  // namespace

std::array<Interval, 4> confidence_intervals(const GaussPred4& p) {
    std::array<Interval, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        const double s = std::sqrt(p.cov_diag[i]);
        out[i] = Interval{p.mean[i] - kZ95 * s, p.mean[i] + kZ95 * s};
    }
    return out;
}

UncertaintyReport localization_uncertainty(const GaussPred4& p, std::size_t k) {
    if (k < 5) {
        throw KTooSmall("division count k must be at least 5, got " +
                        std::to_string(k));
    }
    const std::array<Interval, 4> ci = confidence_intervals(p);

    std::vector<double> ious(k);
    for (std::size_t i = 1; i <= k; ++i) {
        // midpoint of the i-th of k equal subintervals
        const double frac =
            (2.0 * static_cast<double>(i) - 1.0) / (2.0 * static_cast<double>(k));
        std::array<double, 4> cand;
        for (std::size_t d = 0; d < 4; ++d) {
            cand[d] = ci[d].lo + frac * (ci[d].hi - ci[d].lo);
        }
        cand[2] = std::max(cand[2], kMinCandidateSize);
        cand[3] = std::max(cand[3], kMinCandidateSize);
        // Candidates may leave the unit frame or the size bounds; the overlap
        // itself is still well defined.
        ious[i - 1] = detail::iou_raw(p.mean[0], p.mean[1], p.mean[2], p.mean[3],
                                      cand[0], cand[1], cand[2], cand[3]);
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ious[a] > ious[b]; });

    double sum = 0.0;
    for (std::size_t j = 0; j < 5; ++j) sum += ious[order[j]];
    const double avg = sum / 5.0;

    UncertaintyReport report;
    report.avg_top5_iou = avg;
    report.uncertainty = 1.0 - avg;
    report.k = k;
    return report;
}

double combined_metric(double score, double iou_value) {
    return score * std::sqrt(iou_value);
}

}  // namespace gwbox
