#include "gwbox/gauss.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

#include "gwbox/errors.hpp"

namespace gwbox {

GaussGT2 gt_to_gaussian(const Box& b) {
    GaussGT2 g;
    g.mean = {b.cx, b.cy};
    g.cov_diag = {b.w * b.w / 4.0, b.h * b.h / 4.0};
    return g;
}

GaussPred4 pred_to_gaussian(const Box& b, const std::array<double, 4>& sigma) {
    GaussPred4 p;
    p.mean = {b.cx, b.cy, b.w, b.h};
    for (std::size_t i = 0; i < 4; ++i) {
        const double s = sigma[i];
        if (!(s > 0.0)) {
            throw NonPositiveSigma("sigma[" + std::to_string(i) +
                                   "] must be positive, got " + std::to_string(s));
        }
        const double var = s * s;
        if (var > 1.0) {
            throw SigmaOutOfRange("sigma[" + std::to_string(i) + "]^2 = " +
                                  std::to_string(var) + " exceeds 1");
        }
        p.cov_diag[i] = var;
    }
    return p;
}

Cov4 embed_gt_cov(const GaussGT2& g) {
    Cov4 c;
    c(0, 0) = g.cov_diag[0];
    c(1, 1) = g.cov_diag[1];
    return c;
}

Cov4 diag_cov4(const std::array<double, 4>& diag) {
    Cov4 c;
    for (int i = 0; i < 4; ++i) c(i, i) = diag[static_cast<std::size_t>(i)];
    return c;
}

Cov4 make_cov4(const std::array<double, 16>& entries) {
    Cov4 c;
    c.m = entries;
    for (int r = 0; r < 4; ++r) {
        for (int col = r + 1; col < 4; ++col) {
            if (std::abs(c(r, col) - c(col, r)) > 1e-12) {
                throw std::invalid_argument("covariance not symmetric at (" +
                                            std::to_string(r) + "," +
                                            std::to_string(col) + ")");
            }
        }
    }
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) m(r, col) = c(r, col);
    const Eigen::Vector4d ev =
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(m).eigenvalues();
    if (ev.minCoeff() < -1e-12) {
        throw std::invalid_argument("covariance not positive semidefinite, min eigenvalue " +
                                    std::to_string(ev.minCoeff()));
    }
    return c;
}

double frobenius_norm(const Cov4& c) {
    double s = 0.0;
    for (double v : c.m) s += v * v;
    return std::sqrt(s);
}

}  // namespace gwbox
