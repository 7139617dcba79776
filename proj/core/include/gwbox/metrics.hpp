#pragma once

#include <vector>

#include "gwbox/gauss.hpp"
#include "gwbox/geometry.hpp"

namespace gwbox {

/// Squared 2-Wasserstein distance between the two box Gaussians, which reduces
/// to the squared Euclidean distance of the vectors (cx, cy, w/2, h/2).
double wasserstein2_sq(const Box& a, const Box& b);

/// Squared Gromov-Wasserstein distance between the 2D ground-truth Gaussian
/// and a 4D prediction Gaussian, in closed form:
///
///   4 (tr S_P - tr S_g)^2  +  8 |S_P^(2) - S_g|_F^2
///                          +  8 (|S_P|_F^2 - |S_P^(2)|_F^2)
///
/// where S_P^(2) is the top-left 2x2 block of S_P. The value depends only on
/// the covariances, never on the means, and is zero exactly when S_P embeds
/// S_g in its top-left block with zeros elsewhere. Because the distance
/// ignores means, a box-regression loss needs separate location terms; see
/// box_loss in risk.hpp.
double gromov_wasserstein_sq(const GaussGT2& g, const GaussPred4& p);

/// Same closed form for a dense prediction covariance. Admits boundary
/// covariances (zero variances) that the diagonal type forbids.
double gromov_wasserstein_sq(const GaussGT2& g, const Cov4& cov);

/// Record of GW^2(S* + t D) / t^2 over a decreasing sequence of scales t for a
/// fixed unit-Frobenius direction D. The closed form is exactly quadratic in
/// the perturbation, so the ratios are constant up to rounding.
struct ConvergenceProbe {
    Cov4 direction;
    std::vector<double> scales;
    std::vector<double> ratios;
};

/// Probes the quadratic convergence rate of GW^2 around the embedded optimum.
/// `direction` must have unit Frobenius norm; `scales` must be strictly
/// decreasing and positive. Throws InvalidPerturbation if any perturbed
/// covariance picks up a negative diagonal entry.
ConvergenceProbe convergence_probe(const GaussGT2& g, const Cov4& direction,
                                   const std::vector<double>& scales);

}  // namespace gwbox
