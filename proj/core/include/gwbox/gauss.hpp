#pragma once

#include <array>

#include "gwbox/geometry.hpp"

namespace gwbox {

/// 2D Gaussian model of a ground-truth box: mean at the center, diagonal
/// covariance Diag(w^2/4, h^2/4) from back-projecting the inscribed ellipse.
struct GaussGT2 {
    std::array<double, 2> mean{};
    std::array<double, 2> cov_diag{};  // strictly positive
};

/// 4D Gaussian model of a predicted box: mean (cx, cy, w, h), independent
/// components with learnable variances in (0, 1].
struct GaussPred4 {
    std::array<double, 4> mean{};
    std::array<double, 4> cov_diag{};
};

/// Dense symmetric positive-semidefinite 4x4 covariance, row-major. Used for
/// boundary covariances (zero size variances) and for perturbation probes;
/// everyday predictions stay in the diagonal GaussPred4 form.
struct Cov4 {
    std::array<double, 16> m{};

    double operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
};

GaussGT2 gt_to_gaussian(const Box& b);

/// Builds the prediction Gaussian from a box and four standard deviations.
/// Throws NonPositiveSigma if any sigma <= 0, SigmaOutOfRange if any sigma^2 > 1.
GaussPred4 pred_to_gaussian(const Box& b, const std::array<double, 4>& sigma);

/// Embeds the 2x2 ground-truth covariance into the top-left block of a 4x4
/// matrix, zero elsewhere. This is the unique covariance at which the
/// Gromov-Wasserstein distance to the ground truth vanishes.
Cov4 embed_gt_cov(const GaussGT2& g);

Cov4 diag_cov4(const std::array<double, 4>& diag);

/// Validates symmetry (within 1e-12) and positive semidefiniteness
/// (eigenvalues >= -1e-12); throws std::invalid_argument otherwise.
Cov4 make_cov4(const std::array<double, 16>& entries);

double frobenius_norm(const Cov4& c);

}  // namespace gwbox
