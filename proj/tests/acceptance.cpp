// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gwbox/cli.hpp"
#include "gwbox/errors.hpp"
#include "gwbox/harness.hpp"
#include "gwbox/matching.hpp"
#include "gwbox/metrics.hpp"
#include "gwbox/regress.hpp"
#include "gwbox/risk.hpp"
#include "gwbox/rng.hpp"
#include "gwbox/uncertainty.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

gwbox::Box random_box(gwbox::Rng& rng) {
    gwbox::Box b;
    b.w = rng.uniform(0.05, 0.5);
    b.h = rng.uniform(0.05, 0.5);
    b.cx = rng.uniform(b.w / 2.0, 1.0 - b.w / 2.0);
    b.cy = rng.uniform(b.h / 2.0, 1.0 - b.h / 2.0);
    return b;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// --------------------------------------------------------------------------
// 1. closed-form worked values

Outcome criterion_gw_closed_form() {
    using namespace gwbox;
    const auto start = Clock::now();

    GaussGT2 g;
    g.mean = {0.5, 0.5};
    g.cov_diag = {0.04, 0.01};
    const double zero =
        gromov_wasserstein_sq(g, diag_cov4({0.04, 0.01, 0.0, 0.0}));
    const double mixed =
        gromov_wasserstein_sq(g, diag_cov4({0.04, 0.01, 0.02, 0.03}));

    GaussGT2 g2;
    g2.mean = {0.5, 0.5};
    g2.cov_diag = {0.3, 0.7};
    const double quad =
        gromov_wasserstein_sq(g2, diag_cov4({0.3, 0.7, 0.5, 0.5}));

    const double elapsed = seconds_since(start);
    const bool pass = std::abs(zero) <= 1e-9 && std::abs(mixed - 0.0204) <= 1e-9 &&
                      std::abs(quad - 8.0) <= 1e-9 && elapsed < 1.0;
    return {pass, "values " + fmt(zero) + " / " + fmt(mixed) + " / " + fmt(quad) +
                      ", " + fmt(elapsed) + " s"};
}

// --------------------------------------------------------------------------
// 2. zero characterization

Outcome criterion_zero_case() {
    using namespace gwbox;
    Rng rng(1002);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const GaussGT2 g = gt_to_gaussian(random_box(rng));
        worst = std::max(worst, gromov_wasserstein_sq(g, embed_gt_cov(g)));
    }
    if (worst >= 1e-12) {
        return {false, "GW^2 at the embedded optimum reached " + fmt(worst)};
    }

    std::size_t positive = 0;
    const std::size_t trials = 10000;
    for (std::size_t i = 0; i < trials; ++i) {
        const GaussGT2 g = gt_to_gaussian(random_box(rng));
        std::array<double, 4> diag{g.cov_diag[0], g.cov_diag[1], 0.0, 0.0};
        // random diagonal covariance at least 1e-3 away from the optimum
        while (true) {
            std::array<double, 4> cand{rng.uniform(0.0, 0.3), rng.uniform(0.0, 0.3),
                                       rng.uniform(0.0, 0.3), rng.uniform(0.0, 0.3)};
            double dist = 0.0;
            for (std::size_t d = 0; d < 4; ++d) {
                dist += (cand[d] - diag[d]) * (cand[d] - diag[d]);
            }
            if (std::sqrt(dist) > 1e-3) {
                diag = cand;
                break;
            }
        }
        if (gromov_wasserstein_sq(g, diag_cov4(diag)) > 0.0) ++positive;
    }
    return {positive == trials,
            "optimum max " + fmt(worst) + ", " + std::to_string(positive) + "/" +
                std::to_string(trials) + " perturbed covariances strictly positive"};
}

// --------------------------------------------------------------------------
// 3. quadratic convergence probe

Outcome criterion_convergence_probe() {
    using namespace gwbox;
    Rng rng(1003);
    double worst_rel = 0.0;
    int built = 0;
    int attempts = 0;
    while (built < 50 && attempts < 5000) {
        ++attempts;
        const GaussGT2 g = gt_to_gaussian(random_box(rng));
        Cov4 dir;
        for (int r = 0; r < 4; ++r) {
            for (int c = r; c < 4; ++c) {
                const double amp = (r < 2 && c < 2) ? 1.0 : 0.15;
                const double v = rng.uniform(-amp, amp);
                dir(r, c) = v;
                dir(c, r) = v;
            }
        }
        dir(2, 2) = rng.uniform(0.3, 1.0);
        dir(3, 3) = rng.uniform(0.3, 1.0);
        for (int pass = 0; pass < 2; ++pass) {
            const double norm = frobenius_norm(dir);
            for (auto& v : dir.m) v /= norm;
        }

        // keep only directions whose perturbed covariance stays PSD
        const Cov4 base = embed_gt_cov(g);
        std::array<double, 16> perturbed{};
        for (std::size_t i = 0; i < 16; ++i) perturbed[i] = base.m[i] + 1e-3 * dir.m[i];
        try {
            make_cov4(perturbed);
        } catch (const std::invalid_argument&) {
            continue;
        }

        const ConvergenceProbe probe = convergence_probe(g, dir, {1e-3, 1e-4});
        const double rel = std::abs(probe.ratios[0] - probe.ratios[1]) /
                           std::abs(probe.ratios[1]);
        worst_rel = std::max(worst_rel, rel);
        ++built;
    }
    if (built < 50) return {false, "could not build 50 PSD directions"};

    GaussGT2 g;
    g.mean = {0.5, 0.5};
    g.cov_diag = {0.04, 0.01};
    Cov4 block;
    block(2, 2) = 1.0 / std::sqrt(2.0);
    block(3, 3) = 1.0 / std::sqrt(2.0);
    const ConvergenceProbe probe =
        convergence_probe(g, block, {1e-1, 1e-2, 1e-3, 1e-4});
    double worst_const = 0.0;
    for (double r : probe.ratios) worst_const = std::max(worst_const, std::abs(r - 16.0));

    const bool pass = worst_rel < 0.05 && worst_const < 1e-9;
    return {pass, "50 directions, worst ratio drift " + fmt(worst_rel) +
                      ", block-structured deviation " + fmt(worst_const)};
}

// --------------------------------------------------------------------------
// 4. Bayes risk vs Monte-Carlo oracle

Outcome criterion_bayes_risk_oracle() {
    using namespace gwbox;
    const auto start = Clock::now();
    Rng rng(1004);
    double worst_rel = 0.0;
    for (int i = 0; i < 20; ++i) {
        std::array<double, 4> sigma;
        for (auto& s : sigma) s = rng.uniform(0.05, 1.0);
        const double analytic =
            sigma[0] * sigma[0] + sigma[1] * sigma[1] + sigma[2] * sigma[2] +
            sigma[3] * sigma[3];
        const double mc = mc_bayes_risk_oracle(sigma, 1000000, 7000 + i);
        worst_rel = std::max(worst_rel, std::abs(mc - analytic) / analytic);
    }
    const double elapsed = seconds_since(start);
    return {worst_rel < 0.01 && elapsed < 30.0,
            "worst relative error " + fmt(worst_rel) + ", " + fmt(elapsed) + " s"};
}

// --------------------------------------------------------------------------
// 5. assignment solver vs exhaustive enumeration

// Candidates are summed in row order, the same order hungarian() uses, so the
// optimal totals are comparable bit for bit.
double brute_force_min(const gwbox::CostMatrix& c) {
    const bool transpose = c.rows > c.cols;
    const std::size_t small = transpose ? c.cols : c.rows;
    const std::size_t large = transpose ? c.rows : c.cols;
    std::vector<std::size_t> perm(large);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < small; ++i) {
            if (transpose) {
                pairs.emplace_back(perm[i], i);
            } else {
                pairs.emplace_back(i, perm[i]);
            }
        }
        std::sort(pairs.begin(), pairs.end());
        double total = 0.0;
        for (const auto& [r, col] : pairs) total += c.at(r, col);
        best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Outcome criterion_hungarian_oracle() {
    using namespace gwbox;
    Rng rng(1005);
    for (int iter = 0; iter < 200; ++iter) {
        CostMatrix c;
        c.rows = 1 + rng.below(6);
        c.cols = 1 + rng.below(6);
        c.entries.resize(c.rows * c.cols);
        for (auto& v : c.entries) v = rng.uniform(-10.0, 10.0);

        const MatchResult r = hungarian(c);
        if (r.total_cost != brute_force_min(c)) {
            return {false, "instance " + std::to_string(iter) +
                               " differs from the exhaustive minimum"};
        }

        CostMatrix scaled = c;
        const double factor = rng.uniform(0.5, 4.0);
        for (auto& v : scaled.entries) v *= factor;
        if (hungarian(scaled).pairs != r.pairs) {
            return {false, "positive scaling changed the assignment"};
        }
        if (c.rows == c.cols) {
            CostMatrix shifted = c;
            const double shift = rng.uniform(-5.0, 5.0);
            for (auto& v : shifted.entries) v += shift;
            if (hungarian(shifted).pairs != r.pairs) {
                return {false, "constant shift changed the assignment"};
            }
        }
    }
    return {true, "200 instances exact, scaling and shift invariance hold"};
}

// --------------------------------------------------------------------------
// 6. localization uncertainty algorithm

Outcome criterion_uncertainty_algorithm() {
    using namespace gwbox;
    const UncertaintyReport worked = localization_uncertainty(
        pred_to_gaussian(Box{0.5, 0.5, 0.4, 0.4}, {0.05, 0.05, 0.05, 0.05}), 5);
    if (std::abs(worked.uncertainty - 0.3395) > 1e-3) {
        return {false, "worked k=5 example gave " + fmt(worked.uncertainty)};
    }

    const UncertaintyReport tiny = localization_uncertainty(
        pred_to_gaussian(Box{0.5, 0.5, 0.4, 0.4}, {1e-9, 1e-9, 1e-9, 1e-9}), 300);
    if (tiny.uncertainty >= 1e-6) {
        return {false, "vanishing sigma gave uncertainty " + fmt(tiny.uncertainty)};
    }

    Rng rng(1006);
    int non_decreasing = 0;
    const int trials = 1000;
    for (int i = 0; i < trials; ++i) {
        const Box b = random_box(rng);
        std::array<double, 4> sigma;
        for (auto& s : sigma) s = rng.uniform(0.005, 0.4);
        std::array<double, 4> doubled;
        for (std::size_t d = 0; d < 4; ++d) doubled[d] = 2.0 * sigma[d];
        const double u1 =
            localization_uncertainty(pred_to_gaussian(b, sigma), 300).uncertainty;
        const double u2 =
            localization_uncertainty(pred_to_gaussian(b, doubled), 300).uncertainty;
        if (u2 >= u1) ++non_decreasing;
    }
    const bool pass = non_decreasing >= 990;
    return {pass, "worked value " + fmt(worked.uncertainty) + ", monotone in " +
                      std::to_string(non_decreasing) + "/1000 doublings"};
}

// --------------------------------------------------------------------------
// 7. uncertainty pipeline cost is mildly superlinear in k

std::string detection_line(const std::string& image, double score,
                           const gwbox::Box& b, double sigma) {
    std::ostringstream ss;
    ss << "{\"image_id\": \"" << image << "\", \"class_id\": 0, \"score\": "
       << gwbox::cli::format_double(score) << ", \"box\": ["
       << gwbox::cli::format_double(b.cx) << ", " << gwbox::cli::format_double(b.cy)
       << ", " << gwbox::cli::format_double(b.w) << ", "
       << gwbox::cli::format_double(b.h) << "], \"sigma\": ["
       << gwbox::cli::format_double(sigma) << ", " << gwbox::cli::format_double(sigma)
       << ", " << gwbox::cli::format_double(sigma) << ", "
       << gwbox::cli::format_double(sigma) << "]}\n";
    return ss.str();
}

Outcome criterion_complexity(const fs::path& dir) {
    using namespace gwbox;
    Rng rng(1007);
    std::ostringstream det;
    for (int i = 0; i < 10000; ++i) {
        det << detection_line("img" + std::to_string(i % 100),
                              rng.uniform(0.05, 1.0), random_box(rng),
                              rng.uniform(0.01, 0.3));
    }
    const std::string det_path = (dir / "complexity_det.jsonl").string();
    {
        std::ofstream out(det_path, std::ios::binary);
        out << det.str();
    }

    // full pipeline (parse, compute, format, write), mirroring how the
    // division count shows up in end-to-end inference cost
    auto run_once = [&](const std::string& k, const std::string& out_name) {
        const auto start = Clock::now();
        const int rc = cli::run({"uncertainty", "--det", det_path, "--out",
                                 (dir / out_name).string(), "--k", k});
        if (rc != 0) throw std::runtime_error("uncertainty pipeline failed");
        return seconds_since(start);
    };

    run_once("100", "warmup.csv");  // warm the page cache
    const double t100 = std::min(run_once("100", "k100.csv"), run_once("100", "k100.csv"));
    const double t600 = std::min(run_once("600", "k600.csv"), run_once("600", "k600.csv"));
    const double ratio = t600 / t100;
    return {ratio <= 3.5, "10000 detections: k=100 " + fmt(t100) + " s, k=600 " +
                              fmt(t600) + " s, ratio " + fmt(ratio)};
}

// --------------------------------------------------------------------------
// 8. overlap-metric counterexample

Outcome criterion_counterexample() {
    using namespace gwbox;
    const auto start = Clock::now();
    const CounterexamplePair p = counterexample_search(0, 1e-6, 0.01, 10000);
    const double elapsed = seconds_since(start);
    if (!(p.giou_gap < 1e-6 && p.ciou_gap < 1e-6 && p.gw_gap > 0.01)) {
        return {false, "returned pair violates its own gaps"};
    }
    if (elapsed >= 1.0) return {false, "search took " + fmt(elapsed) + " s"};

    // analytic nested-square family at eps = 0
    const Box gt{0.5, 0.5, 0.4, 0.4};
    const Box a{0.5, 0.5, 0.2, 0.2};
    const Box b{0.5, 0.5, 0.8, 0.8};
    const GaussGT2 g = gt_to_gaussian(gt);
    const double gw_a =
        gromov_wasserstein_sq(g, diag_cov4({a.w * a.w / 4.0, a.h * a.h / 4.0, 0, 0}));
    const double gw_b =
        gromov_wasserstein_sq(g, diag_cov4({b.w * b.w / 4.0, b.h * b.h / 4.0, 0, 0}));
    const bool values_ok = std::abs(giou(gt, a) - 0.25) < 1e-9 &&
                           std::abs(giou(gt, b) - 0.25) < 1e-9 &&
                           std::abs(ciou(gt, a) - 0.25) < 1e-9 &&
                           std::abs(ciou(gt, b) - 0.25) < 1e-9 &&
                           std::abs(gw_a - 0.0288) < 1e-9 &&
                           std::abs(gw_b - 0.4608) < 1e-9 &&
                           std::abs((gw_b - gw_a) - 0.432) < 1e-9;
    return {values_ok, "search " + fmt(elapsed) + " s, gap " + fmt(p.gw_gap) +
                           ", analytic values " + fmt(gw_a) + " / " + fmt(gw_b)};
}

// --------------------------------------------------------------------------
// 9. box-fit demo

Outcome criterion_fit_demo() {
    using namespace gwbox;
    const auto start = Clock::now();
    const Box gt{0.5, 0.5, 0.4, 0.2};
    const GaussGT2 g = gt_to_gaussian(gt);
    const LossConfig cfg = make_loss_config(2.0, 5.0, 1.0);

    int converged = 0;
    int structured = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const FitResult r = fit_box(gt, std::nullopt, cfg, 5000, 0.05, seed);
        const FitStep& last = r.trace.back();
        if (last.gw_term < 1e-6 && last.l1_term < 1e-3) {
            ++converged;
            if (std::abs(last.sigma2[0] - g.cov_diag[0]) < 1e-2 &&
                std::abs(last.sigma2[1] - g.cov_diag[1]) < 1e-2 &&
                last.sigma2[2] < 1e-3 && last.sigma2[3] < 1e-3) {
                ++structured;
            }
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass = converged >= 9 && structured >= 9 && elapsed < 120.0;
    return {pass, std::to_string(converged) + "/10 converged, " +
                      std::to_string(structured) +
                      "/10 with the optimal variance structure, " + fmt(elapsed) +
                      " s"};
}

// --------------------------------------------------------------------------
// 10. calibration trend

Outcome criterion_calibration() {
    using namespace gwbox;
    const auto scenes = gen_synthetic(42, 100, 10, 0.1);
    const CalibrationStats stats = calibration_experiment(scenes, 300, 4);
    const bool pass = stats.spearman_uncertainty_error > 0.3 &&
                      stats.spearman_combined_uncertainty < -0.3;
    return {pass, "Spearman(uncertainty, 1-IoU) = " +
                      fmt(stats.spearman_uncertainty_error) +
                      ", Spearman(combined, uncertainty) = " +
                      fmt(stats.spearman_combined_uncertainty)};
}

// --------------------------------------------------------------------------
// 11. loss identities

Outcome criterion_loss_identities() {
    using namespace gwbox;
    Rng rng(1011);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double s = rng.uniform(0.01, 0.99);
        const double gv = rng.uniform(-1.0, 1.0);
        const double with_risk = br_cls_loss({{s, gv, 1e-8}}, {});
        const double without = iou_aware_cls_loss({{s, gv}}, {});
        worst = std::max(worst, std::abs(with_risk - without));
    }
    if (worst >= 1e-6) {
        return {false, "risk-aware loss failed to reduce, gap " + fmt(worst)};
    }

    const Box gt{0.5, 0.5, 0.4, 0.2};
    const Cov4 star = embed_gt_cov(gt_to_gaussian(gt));
    const double configs[][3] = {
        {2, 5, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 7, 2}, {0.1, 0.1, 9}};
    for (const auto& c : configs) {
        const double loss =
            box_loss(gt, gt, star, make_loss_config(c[0], c[1], c[2]));
        if (loss != 0.0) {
            return {false, "box loss at the exact optimum is " + fmt(loss)};
        }
    }
    return {true, "reduction gap " + fmt(worst) +
                      ", box loss exactly zero at the optimum for 6 weight configs"};
}

// --------------------------------------------------------------------------
// 12. byte-identical command-line outputs

Outcome criterion_cli_determinism(const fs::path& dir) {
    using namespace gwbox;
    Rng rng(1012);
    std::ostringstream gt_ss, det_ss;
    for (int i = 0; i < 60; ++i) {
        const std::string img = "img" + std::to_string(i % 12);
        const Box g = random_box(rng);
        gt_ss << "{\"image_id\": \"" << img << "\", \"class_id\": " << i % 3
              << ", \"box\": [" << cli::format_double(g.cx) << ", "
              << cli::format_double(g.cy) << ", " << cli::format_double(g.w) << ", "
              << cli::format_double(g.h) << "]}\n";
        det_ss << detection_line(img, rng.uniform(0.05, 1.0), random_box(rng),
                                 rng.uniform(0.01, 0.5));
    }
    const std::string gt_path = (dir / "det_gt.jsonl").string();
    const std::string det_path = (dir / "det_det.jsonl").string();
    {
        std::ofstream a(gt_path, std::ios::binary);
        a << gt_ss.str();
        std::ofstream b(det_path, std::ios::binary);
        b << det_ss.str();
    }

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto files_in = [&](const fs::path& d) {
        std::string all;
        std::vector<fs::path> entries;
        for (const auto& e : fs::directory_iterator(d)) entries.push_back(e.path());
        std::sort(entries.begin(), entries.end());
        for (const auto& e : entries) all += slurp(e);
        return all;
    };

    struct Variant {
        std::string name;
        std::vector<std::string> args;
        bool is_dir;
    };
    const std::vector<Variant> commands = {
        {"metric", {"metric", "--gt", gt_path, "--det", det_path, "--out", ""}, false},
        {"match", {"match", "--gt", gt_path, "--det", det_path, "--out", ""}, false},
        {"uncertainty",
         {"uncertainty", "--det", det_path, "--out", "", "--k", "60"},
         false},
        {"eval", {"eval", "--gt", gt_path, "--det", det_path, "--out", ""}, false},
        {"fit-demo",
         {"fit-demo", "--out", "", "--steps", "300", "--seed", "5"},
         false},
        {"calibrate",
         {"calibrate", "--out-dir", "", "--scenes", "20", "--dets-per-scene", "5",
          "--k", "40", "--seed", "42"},
         true},
        {"counterexample", {"counterexample", "--out", "", "--seed", "3"}, false},
    };

    for (const auto& cmd : commands) {
        std::vector<std::string> outputs;
        int variant = 0;
        for (const std::string threads : {"1", "4", "1"}) {
            auto args = cmd.args;
            const std::string target =
                (dir / (cmd.name + "_v" + std::to_string(variant))).string();
            for (auto& a : args) {
                if (a.empty()) a = target;
            }
            args.push_back("--threads");
            args.push_back(threads);
            if (cli::run(args) != 0) {
                return {false, cmd.name + " exited nonzero"};
            }
            outputs.push_back(cmd.is_dir ? files_in(target) : slurp(target));
            ++variant;
        }
        if (outputs[0] != outputs[1] || outputs[0] != outputs[2]) {
            return {false, cmd.name + " output differs across runs or thread counts"};
        }
        if (outputs[0].empty()) {
            return {false, cmd.name + " produced empty output"};
        }
    }
    return {true, "7 subcommands byte-identical across reruns and --threads {1, 4}"};
}

}  // namespace

int main() {
    const fs::path dir =
        fs::temp_directory_path() / "gwbox_acceptance_work";
    fs::remove_all(dir);
    fs::create_directories(dir);

    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "Gromov-Wasserstein closed-form worked values", criterion_gw_closed_form},
        {2, "zero exactly at the embedded covariance", criterion_zero_case},
        {3, "quadratic convergence probe", criterion_convergence_probe},
        {4, "Bayes risk matches the Monte-Carlo oracle", criterion_bayes_risk_oracle},
        {5, "assignment equals exhaustive enumeration", criterion_hungarian_oracle},
        {6, "localization uncertainty algorithm", criterion_uncertainty_algorithm},
        {7, "uncertainty pipeline scaling in k", [&] { return criterion_complexity(dir); }},
        {8, "overlap-metric counterexample", criterion_counterexample},
        {9, "box-fit demo convergence", criterion_fit_demo},
        {10, "uncertainty calibration trend", criterion_calibration},
        {11, "loss identities", criterion_loss_identities},
        {12, "byte-identical CLI outputs", [&] { return criterion_cli_determinism(dir); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome{false, ""};
        try {
            outcome = c.fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %2d. %s — %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }

    fs::remove_all(dir);
    if (failures > 0) {
        std::printf("%d of %zu acceptance criteria failed\n", failures,
                    criteria.size());
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
