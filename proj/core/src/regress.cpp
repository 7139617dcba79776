#include "gwbox/regress.hpp"

#include <cmath>
#include <string>

#include "gwbox/errors.hpp"
#include "gwbox/metrics.hpp"
#include "gwbox/rng.hpp"

namespace gwbox {

namespace {

constexpr double kVarFloor = 1e-6;
constexpr double kGradStep = 1e-6;

double logistic(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

struct LossBreakdown {
    double total;
    double iou_term;
    double l1_term;
    double gw_term;
};

LossBreakdown evaluate(const Box& gt, const GaussGT2& gt_gauss, const FitParams& p,
                       const LossConfig& cfg) {
    const Box b = p.box();
    const std::array<double, 4> s2 = p.sigma2();
    GaussPred4 pg;
    pg.mean = {b.cx, b.cy, b.w, b.h};
    pg.cov_diag = s2;

    LossBreakdown out;
    out.iou_term = 1.0 - giou(gt, b);
    out.l1_term = std::abs(gt.cx - b.cx) + std::abs(gt.cy - b.cy) +
                  std::abs(gt.w - b.w) + std::abs(gt.h - b.h);
    out.gw_term = gromov_wasserstein_sq(gt_gauss, pg);
    out.total = cfg.lambda_iou * out.iou_term + cfg.lambda_l1 * out.l1_term +
                cfg.lambda_gw * out.gw_term;
    return out;
}

FitParams from_flat(const std::vector<double>& v) {
    FitParams p;
    for (std::size_t i = 0; i < 4; ++i) p.mean_raw[i] = v[i];
    for (std::size_t i = 0; i < 4; ++i) p.rho[i] = v[4 + i];
    return p;
}

}  // namespace

Box FitParams::box() const {
    return Box{logistic(mean_raw[0]), logistic(mean_raw[1]), logistic(mean_raw[2]),
               logistic(mean_raw[3])};
}

std::array<double, 4> FitParams::sigma2() const {
    std::array<double, 4> s2;
    for (std::size_t i = 0; i < 4; ++i) {
        s2[i] = kVarFloor + (1.0 - kVarFloor) * logistic(rho[i]);
    }
    return s2;
}

FitParams random_fit_params(std::uint64_t seed) {
    Rng rng(seed);
    FitParams p;
    for (std::size_t i = 0; i < 4; ++i) p.mean_raw[i] = rng.uniform(-2.0, 2.0);
    for (std::size_t i = 0; i < 4; ++i) p.rho[i] = rng.uniform(-2.0, 2.0);
    return p;
}

double mc_bayes_risk_oracle(const std::array<double, 4>& sigma,
                            std::uint64_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) {
        throw std::invalid_argument("mc_bayes_risk_oracle: need at least one sample");
    }
    for (double s : sigma) {
        if (!(s > 0.0)) throw NonPositiveSigma("oracle sigma must be positive");
    }
    Rng rng(seed);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        double sq = 0.0;
        for (std::size_t d = 0; d < 4; ++d) {
            const double truth = rng.uniform01();
            const double pred = rng.normal(truth, sigma[d]);
            sq += (pred - truth) * (pred - truth);
        }
        acc += sq;
    }
    return acc / static_cast<double>(n_samples);
}

std::vector<double> numeric_gradient(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& params, double h) {
    std::vector<double> grad(params.size());
    std::vector<double> probe = params;
    for (std::size_t i = 0; i < params.size(); ++i) {
        probe[i] = params[i] + h;
        const double fp = objective(probe);
        probe[i] = params[i] - h;
        const double fm = objective(probe);
        probe[i] = params[i];
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw NonFiniteObjective("objective not finite near parameter " +
                                     std::to_string(i));
        }
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

FitResult fit_box(const Box& gt, const std::optional<FitParams>& init,
                  const LossConfig& cfg, std::size_t steps, double lr,
                  std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("fit_box: steps must be >= 1");
    if (!(lr > 0.0)) throw std::invalid_argument("fit_box: lr must be positive");
    validate_box(gt);

    const GaussGT2 gt_gauss = gt_to_gaussian(gt);
    FitParams current = init ? *init : random_fit_params(seed);

    auto objective = [&](const std::vector<double>& v) {
        return evaluate(gt, gt_gauss, from_flat(v), cfg).total;
    };
    auto record = [&](std::vector<FitStep>& trace, const FitParams& p) {
        const LossBreakdown lb = evaluate(gt, gt_gauss, p, cfg);
        if (!std::isfinite(lb.total)) {
            throw Diverged("loss became non-finite at step " +
                           std::to_string(trace.size()));
        }
        trace.push_back(FitStep{lb.total, lb.iou_term, lb.l1_term, lb.gw_term,
                                p.sigma2()});
    };

    FitResult result;
    result.trace.reserve(steps + 1);
    record(result.trace, current);

    std::vector<double> x(8);
    for (std::size_t i = 0; i < 4; ++i) x[i] = current.mean_raw[i];
    for (std::size_t i = 0; i < 4; ++i) x[4 + i] = current.rho[i];

    // Resilient full-batch descent (sign-based per-coordinate steps).
    constexpr double kGrow = 1.2;
    constexpr double kShrink = 0.5;
    constexpr double kStepMax = 50.0;
    constexpr double kStepMin = 1e-12;
    std::vector<double> step(8, lr);
    std::vector<double> prev_grad(8, 0.0);

    for (std::size_t it = 0; it < steps; ++it) {
        const std::vector<double> grad = numeric_gradient(objective, x, kGradStep);
        for (std::size_t i = 0; i < 8; ++i) {
            const double agree = prev_grad[i] * grad[i];
            if (agree > 0.0) {
                step[i] = std::min(step[i] * kGrow, kStepMax);
            } else if (agree < 0.0) {
                step[i] = std::max(step[i] * kShrink, kStepMin);
            }
            if (grad[i] > 0.0) {
                x[i] -= step[i];
            } else if (grad[i] < 0.0) {
                x[i] += step[i];
            }
            prev_grad[i] = grad[i];
        }
        current = from_flat(x);
        record(result.trace, current);
    }

    result.params = current;
    result.box = current.box();
    result.gauss.mean = {result.box.cx, result.box.cy, result.box.w, result.box.h};
    result.gauss.cov_diag = current.sigma2();
    return result;
}

}  // namespace gwbox
