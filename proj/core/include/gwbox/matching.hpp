#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gwbox/gauss.hpp"
#include "gwbox/geometry.hpp"

namespace gwbox {

/// Dense rows x cols cost matrix (row-major); all entries finite.
struct CostMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;  // entries[r * cols + c]

    double at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

/// One-to-one assignment: (prediction index, ground-truth index) pairs sorted
/// by prediction index, with the summed cost of the selected entries.
struct MatchResult {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double total_cost = 0.0;
};

/// Per-detection input to cost construction: classification score, predicted
/// box, and its Gaussian model.
struct DetectionInput {
    double score = 0.0;
    Box box;
    GaussPred4 gauss;
};

/// entry(i, j) = -quality(score_i, IoU(pred_i, gt_j), risk_i): minimizing the
/// cost maximizes the risk-refined matching quality. Throws EmptyInput.
CostMatrix build_cost_matrix(const std::vector<DetectionInput>& dets,
                             const std::vector<Box>& gts);

/// Minimum-cost one-to-one assignment of size min(rows, cols), O(n^3)
/// augmenting-path formulation with dual potentials. Rectangular inputs are
/// padded with a cost larger than the sum of absolute entries; padded pairs
/// are dropped from the output. Among multiple optima the lexicographically
/// smallest pair list is returned, established by a canonicalization pass over
/// the zero-reduced-cost edges and re-verified against the optimal value.
MatchResult hungarian(const CostMatrix& c);

}  // namespace gwbox
