#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gwbox/gauss.hpp"
#include "gwbox/geometry.hpp"
#include "gwbox/metrics.hpp"

namespace gwbox {

/// Per-query normalized Bayes risks t_i = risk_i / 4, each in (0, 1].
struct RiskVector {
    std::vector<double> t;
};

/// Weights of the combined box-regression loss. All nonnegative, at least one
/// positive; validated by make_loss_config.
struct LossConfig {
    double lambda_iou = 2.0;
    double lambda_l1 = 5.0;
    double lambda_gw = 1.0;
};

LossConfig make_loss_config(double lambda_iou, double lambda_l1, double lambda_gw);

/// d x N batch of decoder output embeddings, column-major (one column per query).
struct EmbeddingBatch {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<double> values;  // values[col * d + row]

    double at(std::size_t row, std::size_t col) const { return values[col * d + row]; }
    double& at(std::size_t row, std::size_t col) { return values[col * d + row]; }
};

enum class Activation { identity, relu };

/// One affine layer (weight: d_out x d row-major) plus an activation.
struct AffineParams {
    std::size_t d_out = 0;
    std::size_t d_in = 0;
    std::vector<double> weight;  // weight[row * d_in + col]
    std::vector<double> bias;
    Activation activation = Activation::identity;
};

AffineParams identity_affine(std::size_t d);

/// Minimum achievable expected L2 loss of a prediction; equals the covariance
/// trace, in (0, 4].
double bayes_risk(const GaussPred4& p);

/// Normalized risk t_i = bayes_risk(p_i) / 4 in input order. Throws EmptyInput.
RiskVector risk_vector(const std::vector<GaussPred4>& preds);

/// Scales column i of z by the confidence (1 - t_i), then applies the affine
/// layer and activation per column. Throws ShapeMismatch on inconsistent sizes.
EmbeddingBatch refine_embeddings(const EmbeddingBatch& z, const RiskVector& t,
                                 const AffineParams& params);

/// Binary cross-entropy with probabilities clipped to [1e-7, 1 - 1e-7].
double bce(double p, double target);

/// Positive sample for the overlap-aware classification losses: classification
/// score s plus the GIoU against the matched ground truth. The risk-aware
/// variant also carries the un-normalized Bayes risk.
struct PosSample {
    double score = 0.0;
    double giou = 0.0;
};

struct PosSampleRisk {
    double score = 0.0;
    double giou = 0.0;
    double risk = 0.0;
};

/// Overlap-aware classification loss:
///   sum_pos BCE(s_i, r_i) + sum_neg s_j^2 BCE(s_j, 0),
/// with target r = ((giou + 1)/2 - s)^2.
double iou_aware_cls_loss(const std::vector<PosSample>& pos,
                          const std::vector<double>& neg);

/// Risk-weighted variant: the positive target becomes w * r with
/// w = exp(-risk / 4). Reduces to iou_aware_cls_loss as risk -> 0.
double br_cls_loss(const std::vector<PosSampleRisk>& pos,
                   const std::vector<double>& neg);

/// Matching quality s^(1 + risk/4) * u^(4 + risk) in [0, 1]; the multiplicative
/// form with risk-raised exponents demotes uncertain predictions.
double br_match_quality(double score, double iou_value, double risk);

/// Combined regression loss
///   lambda_iou (1 - GIoU) + lambda_l1 |gt - pred|_1 + lambda_gw GW^2.
/// The Gaussian's mean must equal the predicted box components within 1e-12
/// (MeanMismatch otherwise). Location signal comes solely from the GIoU and L1
/// terms; the GW term sees only covariances.
double box_loss(const Box& gt, const Box& pred, const GaussPred4& pred_gauss,
                const LossConfig& cfg);

/// Same loss with a dense prediction covariance (no mean to cross-check);
/// admits boundary covariances with zero size variances.
double box_loss(const Box& gt, const Box& pred, const Cov4& pred_cov,
                const LossConfig& cfg);

}  // namespace gwbox
