#include "gwbox/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gwbox/errors.hpp"

namespace gwbox {

double wasserstein2_sq(const Box& a, const Box& b) {
    const double dx = a.cx - b.cx;
    const double dy = a.cy - b.cy;
    const double dw = a.w / 2.0 - b.w / 2.0;
    const double dh = a.h / 2.0 - b.h / 2.0;
    return dx * dx + dy * dy + dw * dw + dh * dh;
}

double gromov_wasserstein_sq(const GaussGT2& g, const GaussPred4& p) {
    const double tr_diff = (p.cov_diag[0] + p.cov_diag[1] + p.cov_diag[2] +
                            p.cov_diag[3]) -
                           (g.cov_diag[0] + g.cov_diag[1]);
    const double d0 = p.cov_diag[0] - g.cov_diag[0];
    const double d1 = p.cov_diag[1] - g.cov_diag[1];
    // The tail term |S_P|_F^2 - |S_P^(2)|_F^2 is the sum of squares of the
    // entries outside the top-left block; summing those directly keeps it
    // exactly nonnegative.
    return 4.0 * tr_diff * tr_diff + 8.0 * (d0 * d0 + d1 * d1) +
           8.0 * (p.cov_diag[2] * p.cov_diag[2] + p.cov_diag[3] * p.cov_diag[3]);
}

double gromov_wasserstein_sq(const GaussGT2& g, const Cov4& cov) {
    const double tr_diff = (cov(0, 0) + cov(1, 1) + cov(2, 2) + cov(3, 3)) -
                           (g.cov_diag[0] + g.cov_diag[1]);
    double block = 0.0;  // |S_P^(2) - S_g|_F^2 with diagonal S_g
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const double d = cov(r, c) - (r == c ? g.cov_diag[static_cast<std::size_t>(r)] : 0.0);
            block += d * d;
        }
    }
    double tail = 0.0;  // entries outside the top-left 2x2 block
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (r < 2 && c < 2) continue;
            tail += cov(r, c) * cov(r, c);
        }
    }
    return 4.0 * tr_diff * tr_diff + 8.0 * block + 8.0 * tail;
}

ConvergenceProbe convergence_probe(const GaussGT2& g, const Cov4& direction,
                                   const std::vector<double>& scales) {
    const double norm = frobenius_norm(direction);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("direction must have unit Frobenius norm, got " +
                                    std::to_string(norm));
    }
    if (scales.empty()) throw EmptyInput("convergence_probe: no scales");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0)) {
            throw std::invalid_argument("scales must be positive");
        }
        if (i > 0 && !(scales[i] < scales[i - 1])) {
            throw std::invalid_argument("scales must be strictly decreasing");
        }
    }

    const Cov4 base = embed_gt_cov(g);
    ConvergenceProbe probe;
    probe.direction = direction;
    probe.scales = scales;
    probe.ratios.reserve(scales.size());
    for (double t : scales) {
        Cov4 perturbed;
        for (std::size_t i = 0; i < 16; ++i) {
            perturbed.m[i] = base.m[i] + t * direction.m[i];
        }
        for (int d = 0; d < 4; ++d) {
            if (perturbed(d, d) < 0.0) {
                throw InvalidPerturbation("negative variance " +
                                          std::to_string(perturbed(d, d)) +
                                          " at scale " + std::to_string(t));
            }
        }
        probe.ratios.push_back(gromov_wasserstein_sq(g, perturbed) / (t * t));
    }
    return probe;
}

}  // namespace gwbox
