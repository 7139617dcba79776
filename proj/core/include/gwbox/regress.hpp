#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gwbox/gauss.hpp"
#include "gwbox/geometry.hpp"
#include "gwbox/risk.hpp"

namespace gwbox {

/// Unconstrained fit parameters. Box components are logistic-squashed into
/// (0, 1); variances are mapped onto [1e-6, 1] through
/// sigma^2 = 1e-6 + (1 - 1e-6) * logistic(rho), so the model constraints can
/// never be violated mid-run even though the variance optimum sits on the
/// boundary.
struct FitParams {
    std::array<double, 4> mean_raw{};
    std::array<double, 4> rho{};

    Box box() const;
    std::array<double, 4> sigma2() const;
};

/// Draws all eight raw parameters uniformly from [-2, 2].
FitParams random_fit_params(std::uint64_t seed);

/// One recorded optimization step.
struct FitStep {
    double loss = 0.0;
    double iou_term = 0.0;
    double l1_term = 0.0;
    double gw_term = 0.0;
    std::array<double, 4> sigma2{};
};

/// Full trace (initial state plus one record per step) and the fitted model.
struct FitResult {
    std::vector<FitStep> trace;
    Box box;
    GaussPred4 gauss;
    FitParams params;
};

/// Monte-Carlo estimate of the minimum expected L2 loss: draws the true
/// component from Uniform(0,1), the prediction from a normal around it, and
/// averages the squared error. Deterministic given the seed.
double mc_bayes_risk_oracle(const std::array<double, 4>& sigma,
                            std::uint64_t n_samples, std::uint64_t seed);

/// Central-difference gradient (f(p + h e_i) - f(p - h e_i)) / 2h.
/// Throws NonFiniteObjective if any probed value is not finite.
std::vector<double> numeric_gradient(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& params, double h);

/// Minimizes box_loss over FitParams by full-batch resilient gradient descent:
/// per-coordinate steps (initial size `lr`) grow 1.2x while the central
/// -difference gradient sign repeats and halve when it flips. Sign-based steps
/// are what make the run reach the variance optimum on the boundary of the
/// logistic map within a few thousand steps; a global fixed learning rate
/// stalls there. When `init` is absent the start point is drawn from `seed`.
/// Throws Diverged if the loss becomes non-finite.
FitResult fit_box(const Box& gt, const std::optional<FitParams>& init,
                  const LossConfig& cfg, std::size_t steps, double lr,
                  std::uint64_t seed);

}  // namespace gwbox
