#include "gwbox/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gwbox/errors.hpp"
#include "gwbox/metrics.hpp"
#include "gwbox/parallel.hpp"
#include "gwbox/rng.hpp"
#include "gwbox/uncertainty.hpp"

namespace gwbox {

namespace {

constexpr double kCounterexampleEps = 1e-3;  // size-variance slots of search covariances
constexpr double kMinSigmaRecord = 1e-9;

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

double gw_sq_boxes(const Box& gt, const Box& pred) {
    // Deterministic covariance for search-time predictions: inscribed-ellipse
    // variances for the location block, kCounterexampleEps for the size slots.
    const GaussGT2 g = gt_to_gaussian(gt);
    Cov4 cov;
    cov(0, 0) = pred.w * pred.w / 4.0;
    cov(1, 1) = pred.h * pred.h / 4.0;
    cov(2, 2) = kCounterexampleEps;
    cov(3, 3) = kCounterexampleEps;
    return gromov_wasserstein_sq(g, cov);
}

CounterexamplePair evaluate_triple(const Box& gt, const Box& a, const Box& b) {
    CounterexamplePair p;
    p.gt = gt;
    p.pred_a = a;
    p.pred_b = b;
    p.giou_gap = std::abs(giou(gt, a) - giou(gt, b));
    p.ciou_gap = std::abs(ciou(gt, a) - ciou(gt, b));
    p.gw_gap = std::abs(gw_sq_boxes(gt, a) - gw_sq_boxes(gt, b));
    return p;
}

std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

std::vector<SyntheticScene> gen_synthetic(std::uint64_t seed, std::size_t n_scenes,
                                          std::size_t dets_per_scene,
                                          double noise_level) {
    if (noise_level < 0.0 || noise_level > 1.0) {
        throw std::invalid_argument("noise_level must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<SyntheticScene> scenes;
    scenes.reserve(n_scenes);
    for (std::size_t s = 0; s < n_scenes; ++s) {
        SyntheticScene scene;
        const std::size_t n_gt = 1 + static_cast<std::size_t>(rng.below(4));
        scene.gts.reserve(n_gt);
        for (std::size_t g = 0; g < n_gt; ++g) {
            SyntheticGt gt;
            gt.class_id = static_cast<int>(rng.below(3));
            gt.box.w = rng.uniform(0.05, 0.5);
            gt.box.h = rng.uniform(0.05, 0.5);
            gt.box.cx = rng.uniform(gt.box.w / 2.0, 1.0 - gt.box.w / 2.0);
            gt.box.cy = rng.uniform(gt.box.h / 2.0, 1.0 - gt.box.h / 2.0);
            scene.gts.push_back(gt);
        }
        scene.dets.reserve(dets_per_scene);
        for (std::size_t d = 0; d < dets_per_scene; ++d) {
            SyntheticDet det;
            det.source_gt = static_cast<std::size_t>(rng.below(n_gt));
            const SyntheticGt& src = scene.gts[det.source_gt];
            det.class_id = src.class_id;
            const double noise =
                noise_level >= 0.005 ? rng.uniform(0.005, noise_level) : noise_level;
            det.box.cx = clamp(src.box.cx + noise * rng.normal(), 0.0, 1.0);
            det.box.cy = clamp(src.box.cy + noise * rng.normal(), 0.0, 1.0);
            det.box.w = clamp(src.box.w + noise * rng.normal(), 1e-3, 1.0);
            det.box.h = clamp(src.box.h + noise * rng.normal(), 1e-3, 1.0);
            det.sigma.fill(std::max(noise, kMinSigmaRecord));
            const double overlap = iou(det.box, src.box);
            det.score =
                clamp(0.25 + 0.7 * overlap + 0.05 * rng.normal(), 0.01, 1.0);
            scene.dets.push_back(det);
        }
        scenes.push_back(std::move(scene));
    }
    return scenes;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ShapeMismatch("spearman: length mismatch");
    if (x.size() < 2) throw DegenerateRanks("spearman: need at least two samples");
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mean = (n + 1.0) / 2.0;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DegenerateRanks("spearman: constant variable");
    }
    return sxy / std::sqrt(sxx * syy);
}

CalibrationStats calibration_experiment(const std::vector<SyntheticScene>& scenes,
                                        std::size_t k, unsigned threads) {
    if (k < 5) throw KTooSmall("calibration_experiment: k must be at least 5");

    struct Item {
        const SyntheticDet* det;
        const SyntheticGt* src;
    };
    std::vector<Item> items;
    for (const auto& scene : scenes) {
        for (const auto& det : scene.dets) {
            items.push_back(Item{&det, &scene.gts[det.source_gt]});
        }
    }
    if (items.size() < 30) {
        throw EmptyInput("calibration_experiment: need at least 30 detections, got " +
                         std::to_string(items.size()));
    }

    CalibrationStats stats;
    stats.uncertainty.assign(items.size(), 0.0);
    stats.combined.assign(items.size(), 0.0);
    stats.one_minus_iou.assign(items.size(), 0.0);
    parallel_for(items.size(), threads, [&](std::size_t i) {
        const SyntheticDet& det = *items[i].det;
        const GaussPred4 p = pred_to_gaussian(det.box, det.sigma);
        UncertaintyReport rep = localization_uncertainty(p, k);
        const double overlap = iou(det.box, items[i].src->box);
        rep.combined_metric = combined_metric(det.score, overlap);
        stats.uncertainty[i] = rep.uncertainty;
        stats.combined[i] = *rep.combined_metric;
        stats.one_minus_iou[i] = 1.0 - overlap;
    });

    stats.spearman_uncertainty_error = spearman(stats.uncertainty, stats.one_minus_iou);
    stats.spearman_combined_uncertainty = spearman(stats.combined, stats.uncertainty);
    return stats;
}

CounterexamplePair counterexample_search(std::uint64_t seed, double tol,
                                         double min_gap, std::size_t max_trials) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(min_gap > 0.0)) throw std::invalid_argument("min_gap must be positive");

    // Nested concentric squares: containment collapses GIoU to IoU, the shared
    // center removes the DIoU penalty, the equal aspect ratio removes the CIoU
    // term, and shrinking vs. growing by the same factor keeps both IoUs equal
    // while the covariances differ strongly.
    struct Seed {
        double cx, cy, size, factor;
    };
    static constexpr Seed kAnalytic[] = {
        {0.5, 0.5, 0.4, 0.5},
        {0.5, 0.5, 0.3, 0.5},
        {0.4, 0.6, 0.4, 0.6},
        {0.5, 0.5, 0.2, 0.4},
    };

    Rng rng(seed);
    std::size_t trial = 0;
    while (trial < max_trials) {
        Box gt, a, b;
        if (trial < std::size(kAnalytic)) {
            const Seed& s = kAnalytic[trial];
            gt = Box{s.cx, s.cy, s.size, s.size};
            a = Box{s.cx, s.cy, s.size * s.factor, s.size * s.factor};
            b = Box{s.cx, s.cy, s.size / s.factor, s.size / s.factor};
        } else {
            const double size = rng.uniform(0.1, 0.5);
            const double cx = rng.uniform(size / 2.0, 1.0 - size / 2.0);
            const double cy = rng.uniform(size / 2.0, 1.0 - size / 2.0);
            const double factor = rng.uniform(0.3, 0.8);
            gt = Box{cx, cy, size, size};
            a = Box{cx, cy, size * factor, size * factor};
            b = Box{cx, cy, std::min(size / factor, 1.0), std::min(size / factor, 1.0)};
        }
        ++trial;
        if (!is_valid(gt) || !is_valid(a) || !is_valid(b)) continue;
        const CounterexamplePair p = evaluate_triple(gt, a, b);
        if (p.giou_gap < tol && p.ciou_gap < tol && p.gw_gap > min_gap) {
            return p;
        }
    }
    throw NoneFound("no counterexample found in " + std::to_string(max_trials) +
                    " trials");
}

HeatmapGrid heatmap_bins(const std::vector<std::pair<double, double>>& pairs,
                         std::size_t x_bins, std::size_t y_bins, double x_lo,
                         double x_hi, double y_lo, double y_hi) {
    if (x_bins < 1 || y_bins < 1) {
        throw std::invalid_argument("heatmap_bins: need at least one bin per axis");
    }
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        throw std::invalid_argument("heatmap_bins: empty range");
    }

    HeatmapGrid grid;
    grid.x_edges.resize(x_bins + 1);
    grid.y_edges.resize(y_bins + 1);
    for (std::size_t i = 0; i <= x_bins; ++i) {
        grid.x_edges[i] = x_lo + (x_hi - x_lo) * static_cast<double>(i) /
                                     static_cast<double>(x_bins);
    }
    for (std::size_t i = 0; i <= y_bins; ++i) {
        grid.y_edges[i] = y_lo + (y_hi - y_lo) * static_cast<double>(i) /
                                     static_cast<double>(y_bins);
    }
    grid.counts.assign(x_bins, std::vector<std::uint64_t>(y_bins, 0));

    auto locate = [](double v, const std::vector<double>& edges) -> std::ptrdiff_t {
        if (v < edges.front() || v > edges.back()) return -1;
        if (v == edges.back()) return static_cast<std::ptrdiff_t>(edges.size()) - 2;
        // half-open cells [e_i, e_{i+1}): the first edge at or above v bounds it
        const auto it = std::upper_bound(edges.begin(), edges.end(), v);
        return std::distance(edges.begin(), it) - 1;
    };

    for (const auto& [x, y] : pairs) {
        const std::ptrdiff_t xi = locate(x, grid.x_edges);
        const std::ptrdiff_t yi = locate(y, grid.y_edges);
        if (xi < 0 || yi < 0) {
            ++grid.dropped;
            continue;
        }
        ++grid.counts[static_cast<std::size_t>(xi)][static_cast<std::size_t>(yi)];
    }
    return grid;
}

double average_precision(const std::vector<ScoredBox>& dets,
                         const std::vector<Box>& gts, double iou_threshold) {
    std::vector<std::pair<std::size_t, ScoredBox>> gd;
    gd.reserve(dets.size());
    for (const auto& d : dets) gd.emplace_back(0, d);
    std::vector<std::pair<std::size_t, Box>> gg;
    gg.reserve(gts.size());
    for (const auto& g : gts) gg.emplace_back(0, g);
    return average_precision(gd, gg, iou_threshold);
}

double average_precision(const std::vector<std::pair<std::size_t, ScoredBox>>& dets,
                         const std::vector<std::pair<std::size_t, Box>>& gts,
                         double iou_threshold) {
    if (!(iou_threshold > 0.0 && iou_threshold < 1.0)) {
        throw std::invalid_argument("iou_threshold must lie in (0, 1)");
    }
    if (dets.empty() || gts.empty()) return 0.0;

    std::vector<std::size_t> order(dets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dets[a].second.score > dets[b].second.score;
    });

    std::vector<char> gt_used(gts.size(), 0);
    std::vector<char> is_tp(dets.size(), 0);
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const auto& [group, det] = dets[order[rank]];
        double best = iou_threshold;
        std::ptrdiff_t best_j = -1;
        for (std::size_t j = 0; j < gts.size(); ++j) {
            if (gt_used[j] || gts[j].first != group) continue;
            const double v = iou(det.box, gts[j].second);
            if (v >= best) {
                best = v;
                best_j = static_cast<std::ptrdiff_t>(j);
            }
        }
        if (best_j >= 0) {
            gt_used[static_cast<std::size_t>(best_j)] = 1;
            is_tp[rank] = 1;
        }
    }

    // all-point interpolation: running max of precision from the right
    const double n_gt = static_cast<double>(gts.size());
    std::vector<double> recall(dets.size()), precision(dets.size());
    double tp = 0.0;
    for (std::size_t i = 0; i < dets.size(); ++i) {
        tp += is_tp[i];
        recall[i] = tp / n_gt;
        precision[i] = tp / static_cast<double>(i + 1);
    }
    double ap = 0.0;
    double pmax = 0.0;
    for (std::size_t i = dets.size(); i-- > 0;) {
        pmax = std::max(pmax, precision[i]);
        const double prev_recall = i == 0 ? 0.0 : recall[i - 1];
        if (recall[i] > prev_recall) {
            ap += (recall[i] - prev_recall) * pmax;
        }
    }
    return ap;
}

}  // namespace gwbox
