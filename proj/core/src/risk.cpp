#include "gwbox/risk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gwbox/errors.hpp"

namespace gwbox {

namespace {

constexpr double kBceClip = 1e-7;

double l1_distance(const Box& a, const Box& b) {
    return std::abs(a.cx - b.cx) + std::abs(a.cy - b.cy) + std::abs(a.w - b.w) +
           std::abs(a.h - b.h);
}

double loss_terms(const Box& gt, const Box& pred, double gw_sq,
                  const LossConfig& cfg) {
    return cfg.lambda_iou * (1.0 - giou(gt, pred)) +
           cfg.lambda_l1 * l1_distance(gt, pred) + cfg.lambda_gw * gw_sq;
}

}  // namespace

LossConfig make_loss_config(double lambda_iou, double lambda_l1, double lambda_gw) {
    if (!(lambda_iou >= 0.0 && lambda_l1 >= 0.0 && lambda_gw >= 0.0)) {
        throw std::invalid_argument("loss weights must be nonnegative");
    }
    if (lambda_iou == 0.0 && lambda_l1 == 0.0 && lambda_gw == 0.0) {
        throw std::invalid_argument("at least one loss weight must be positive");
    }
    return LossConfig{lambda_iou, lambda_l1, lambda_gw};
}

AffineParams identity_affine(std::size_t d) {
    AffineParams p;
    p.d_out = d;
    p.d_in = d;
    p.weight.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) p.weight[i * d + i] = 1.0;
    p.bias.assign(d, 0.0);
    return p;
}

double bayes_risk(const GaussPred4& p) {
    return p.cov_diag[0] + p.cov_diag[1] + p.cov_diag[2] + p.cov_diag[3];
}

RiskVector risk_vector(const std::vector<GaussPred4>& preds) {
    if (preds.empty()) throw EmptyInput("risk_vector: empty prediction list");
    RiskVector rv;
    rv.t.reserve(preds.size());
    for (const auto& p : preds) rv.t.push_back(bayes_risk(p) / 4.0);
    return rv;
}

EmbeddingBatch refine_embeddings(const EmbeddingBatch& z, const RiskVector& t,
                                 const AffineParams& params) {
    if (z.values.size() != z.d * z.n) {
        throw ShapeMismatch("embedding storage does not match d x n");
    }
    for (double v : z.values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("embedding entries must be finite");
        }
    }
    if (t.t.size() != z.n) {
        throw ShapeMismatch("risk vector length " + std::to_string(t.t.size()) +
                            " != query count " + std::to_string(z.n));
    }
    if (params.d_in != z.d || params.weight.size() != params.d_out * params.d_in ||
        params.bias.size() != params.d_out) {
        throw ShapeMismatch("affine parameter shapes do not match embedding dimension");
    }

    EmbeddingBatch out;
    out.d = params.d_out;
    out.n = z.n;
    out.values.assign(out.d * out.n, 0.0);
    for (std::size_t col = 0; col < z.n; ++col) {
        const double confidence = 1.0 - t.t[col];
        for (std::size_t row = 0; row < params.d_out; ++row) {
            double acc = params.bias[row];
            for (std::size_t k = 0; k < z.d; ++k) {
                acc += params.weight[row * params.d_in + k] *
                       (z.at(k, col) * confidence);
            }
            if (params.activation == Activation::relu && acc < 0.0) acc = 0.0;
            out.at(row, col) = acc;
        }
    }
    return out;
}

double bce(double p, double target) {
    const double pc = std::clamp(p, kBceClip, 1.0 - kBceClip);
    return -(target * std::log(pc) + (1.0 - target) * std::log(1.0 - pc));
}

double iou_aware_cls_loss(const std::vector<PosSample>& pos,
                          const std::vector<double>& neg) {
    double loss = 0.0;
    for (const auto& s : pos) {
        const double r = ((s.giou + 1.0) / 2.0 - s.score) * ((s.giou + 1.0) / 2.0 - s.score);
        loss += bce(s.score, r);
    }
    for (double s : neg) loss += s * s * bce(s, 0.0);
    return loss;
}

double br_cls_loss(const std::vector<PosSampleRisk>& pos,
                   const std::vector<double>& neg) {
    double loss = 0.0;
    for (const auto& s : pos) {
        const double r = ((s.giou + 1.0) / 2.0 - s.score) * ((s.giou + 1.0) / 2.0 - s.score);
        const double w = std::exp(-s.risk / 4.0);
        loss += bce(s.score, w * r);
    }
    for (double s : neg) loss += s * s * bce(s, 0.0);
    return loss;
}

double br_match_quality(double score, double iou_value, double risk) {
    return std::pow(score, 1.0 + risk / 4.0) * std::pow(iou_value, 4.0 + risk);
}

double box_loss(const Box& gt, const Box& pred, const GaussPred4& pred_gauss,
                const LossConfig& cfg) {
    const double mean_gap =
        std::max({std::abs(pred_gauss.mean[0] - pred.cx),
                  std::abs(pred_gauss.mean[1] - pred.cy),
                  std::abs(pred_gauss.mean[2] - pred.w),
                  std::abs(pred_gauss.mean[3] - pred.h)});
    if (mean_gap > 1e-12) {
        throw MeanMismatch("prediction Gaussian mean differs from box by " +
                           std::to_string(mean_gap));
    }
    return loss_terms(gt, pred, gromov_wasserstein_sq(gt_to_gaussian(gt), pred_gauss),
                      cfg);
}

double box_loss(const Box& gt, const Box& pred, const Cov4& pred_cov,
                const LossConfig& cfg) {
    return loss_terms(gt, pred, gromov_wasserstein_sq(gt_to_gaussian(gt), pred_cov),
                      cfg);
}

}  // namespace gwbox
