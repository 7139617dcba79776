#include "gwbox/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "gwbox/errors.hpp"
#include "gwbox/harness.hpp"
#include "gwbox/matching.hpp"
#include "gwbox/metrics.hpp"
#include "gwbox/parallel.hpp"
#include "gwbox/regress.hpp"
#include "gwbox/risk.hpp"
#include "gwbox/uncertainty.hpp"

namespace gwbox::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// record parsing

const json& require_field(const json& j, const char* key, std::size_t line_no) {
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(line_no, key, "missing");
    return *it;
}

std::string field_string(const json& j, const char* key, std::size_t line_no) {
    const json& f = require_field(j, key, line_no);
    if (!f.is_string()) throw ValidationError(line_no, key, "expected a string");
    return f.get<std::string>();
}

int field_class_id(const json& j, std::size_t line_no) {
    const json& f = require_field(j, "class_id", line_no);
    if (!f.is_number_integer()) {
        throw ValidationError(line_no, "class_id", "expected an integer");
    }
    const auto v = f.get<long long>();
    if (v < 0) throw ValidationError(line_no, "class_id", "must be >= 0");
    return static_cast<int>(v);
}

double field_number(const json& f, const char* key, std::size_t line_no) {
    if (!f.is_number()) throw ValidationError(line_no, key, "expected a number");
    return f.get<double>();
}

std::array<double, 4> field_vec4(const json& j, const char* key,
                                 std::size_t line_no) {
    const json& f = require_field(j, key, line_no);
    if (!f.is_array() || f.size() != 4) {
        throw ValidationError(line_no, key, "expected an array of 4 numbers");
    }
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = field_number(f[i], key, line_no);
    return out;
}

Box field_box(const json& j, std::size_t line_no) {
    const std::array<double, 4> v = field_vec4(j, "box", line_no);
    const Box b{v[0], v[1], v[2], v[3]};
    if (!is_valid(b)) {
        throw ValidationError(line_no, "box",
                              "cx, cy must lie in [0,1] and w, h in (0,1]");
    }
    return b;
}

json parse_line(const std::string& line, std::size_t line_no) {
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ValidationError(line_no, "json", "invalid JSON");
    if (!j.is_object()) throw ValidationError(line_no, "json", "expected an object");
    return j;
}

template <typename Record, typename ParseFn>
std::vector<Record> load_records(const std::string& path, ParseFn parse) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<Record> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        records.push_back(parse(line, line_no));
    }
    return records;
}

// ---------------------------------------------------------------------------
// csv helpers

std::string format_u64(std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

// ---------------------------------------------------------------------------
// grouping by image id

struct ImageGroup {
    std::string image_id;
    std::vector<std::size_t> det_indices;  // positions in the detection list
    std::vector<std::size_t> gt_indices;   // positions in the ground-truth list
};

// Groups records by image id; group order follows first appearance in the
// ground-truth file, then detection-only images in detection-file order.
std::vector<ImageGroup> group_by_image(const std::vector<GroundTruthRecord>& gts,
                                       const std::vector<DetectionRecord>& dets) {
    std::vector<ImageGroup> groups;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < gts.size(); ++i) {
        auto [it, inserted] = index.try_emplace(gts[i].image_id, groups.size());
        if (inserted) groups.push_back(ImageGroup{gts[i].image_id, {}, {}});
        groups[it->second].gt_indices.push_back(i);
    }
    for (std::size_t i = 0; i < dets.size(); ++i) {
        auto [it, inserted] = index.try_emplace(dets[i].image_id, groups.size());
        if (inserted) groups.push_back(ImageGroup{dets[i].image_id, {}, {}});
        groups[it->second].det_indices.push_back(i);
    }
    return groups;
}

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::size_t k = 300;
    double lambda_iou = 2.0;
    double lambda_l1 = 5.0;
    double lambda_gw = 1.0;
    unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// subcommands

void run_metric(const std::string& gt_path, const std::string& det_path,
                const std::string& out_path, const GlobalOpts& opts) {
    const auto gts = load_ground_truths(gt_path);
    const auto dets = load_detections(det_path);
    const auto groups = group_by_image(gts, dets);

    struct Pair {
        const GroundTruthRecord* gt;
        const DetectionRecord* det;
        std::size_t index;  // pair index within the image
    };
    std::vector<Pair> pairs;
    for (const auto& g : groups) {
        if (g.gt_indices.size() != g.det_indices.size()) {
            throw std::runtime_error(
                "image '" + g.image_id + "': " + std::to_string(g.gt_indices.size()) +
                " ground truths vs " + std::to_string(g.det_indices.size()) +
                " detections; metric pairs records by line order per image");
        }
        for (std::size_t i = 0; i < g.gt_indices.size(); ++i) {
            pairs.push_back(Pair{&gts[g.gt_indices[i]], &dets[g.det_indices[i]], i});
        }
    }

    std::vector<std::string> rows(pairs.size());
    parallel_for(pairs.size(), opts.threads, [&](std::size_t i) {
        const Box& a = pairs[i].gt->box;
        const Box& b = pairs[i].det->box;
        const GaussPred4 p = pred_to_gaussian(b, pairs[i].det->sigma);
        std::string row = pairs[i].gt->image_id;
        row += ',';
        row += format_u64(pairs[i].index);
        for (double v : {iou(a, b), giou(a, b), diou(a, b), ciou(a, b),
                         wasserstein2_sq(a, b),
                         gromov_wasserstein_sq(gt_to_gaussian(a), p)}) {
            row += ',';
            row += format_double(v);
        }
        row += '\n';
        rows[i] = std::move(row);
    });

    std::string out = "image_id,index,iou,giou,diou,ciou,w2_sq,gw_sq\n";
    for (const auto& r : rows) out += r;
    write_file(out_path, out);
}

void run_match(const std::string& gt_path, const std::string& det_path,
               const std::string& out_path, bool per_class, const GlobalOpts& opts) {
    const auto gts = load_ground_truths(gt_path);
    const auto dets = load_detections(det_path);
    const auto groups = group_by_image(gts, dets);

    struct Task {
        const ImageGroup* group;
        std::vector<std::size_t> det_local;  // inside-image detection indices
        std::vector<std::size_t> gt_local;
    };
    std::vector<Task> tasks;
    for (const auto& g : groups) {
        if (g.det_indices.empty() || g.gt_indices.empty()) continue;
        if (!per_class) {
            Task t{&g, {}, {}};
            for (std::size_t i = 0; i < g.det_indices.size(); ++i) t.det_local.push_back(i);
            for (std::size_t j = 0; j < g.gt_indices.size(); ++j) t.gt_local.push_back(j);
            tasks.push_back(std::move(t));
            continue;
        }
        std::vector<int> class_order;
        for (std::size_t j = 0; j < g.gt_indices.size(); ++j) {
            const int c = gts[g.gt_indices[j]].class_id;
            if (std::find(class_order.begin(), class_order.end(), c) == class_order.end()) {
                class_order.push_back(c);
            }
        }
        for (int c : class_order) {
            Task t{&g, {}, {}};
            for (std::size_t i = 0; i < g.det_indices.size(); ++i) {
                if (dets[g.det_indices[i]].class_id == c) t.det_local.push_back(i);
            }
            for (std::size_t j = 0; j < g.gt_indices.size(); ++j) {
                if (gts[g.gt_indices[j]].class_id == c) t.gt_local.push_back(j);
            }
            if (!t.det_local.empty() && !t.gt_local.empty()) tasks.push_back(std::move(t));
        }
    }

    struct Row {
        std::size_t det_index;
        std::size_t gt_index;
        double cost;
    };
    std::vector<std::vector<Row>> task_rows(tasks.size());
    parallel_for(tasks.size(), opts.threads, [&](std::size_t ti) {
        const Task& t = tasks[ti];
        std::vector<DetectionInput> inputs;
        inputs.reserve(t.det_local.size());
        for (std::size_t i : t.det_local) {
            const DetectionRecord& d = dets[t.group->det_indices[i]];
            inputs.push_back(DetectionInput{d.score, d.box,
                                            pred_to_gaussian(d.box, d.sigma)});
        }
        std::vector<Box> boxes;
        boxes.reserve(t.gt_local.size());
        for (std::size_t j : t.gt_local) boxes.push_back(gts[t.group->gt_indices[j]].box);

        const CostMatrix cm = build_cost_matrix(inputs, boxes);
        const MatchResult result = hungarian(cm);
        for (const auto& [di, gj] : result.pairs) {
            task_rows[ti].push_back(
                Row{t.det_local[di], t.gt_local[gj], cm.at(di, gj)});
        }
    });

    std::string out = "image_id,pred_index,gt_index,cost\n";
    std::size_t ti = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        std::vector<Row> rows;
        while (ti < tasks.size() && tasks[ti].group == &groups[gi]) {
            rows.insert(rows.end(), task_rows[ti].begin(), task_rows[ti].end());
            ++ti;
        }
        std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            return a.det_index < b.det_index;
        });
        for (const Row& r : rows) {
            out += groups[gi].image_id;
            out += ',';
            out += format_u64(r.det_index);
            out += ',';
            out += format_u64(r.gt_index);
            out += ',';
            out += format_double(r.cost);
            out += '\n';
        }
    }
    write_file(out_path, out);
}

void run_uncertainty(const std::string& det_path, const std::string& out_path,
                     const GlobalOpts& opts) {
    const auto dets = load_detections(det_path);
    std::vector<std::string> rows(dets.size());
    parallel_for(dets.size(), opts.threads, [&](std::size_t i) {
        const UncertaintyReport rep = localization_uncertainty(
            pred_to_gaussian(dets[i].box, dets[i].sigma), opts.k);
        std::string row = dets[i].image_id;
        row += ',';
        row += format_u64(i);
        row += ',';
        row += format_double(rep.uncertainty);
        row += ',';
        row += format_double(rep.avg_top5_iou);
        row += '\n';
        rows[i] = std::move(row);
    });
    std::string out = "image_id,index,uncertainty,avg_top5_iou\n";
    for (const auto& r : rows) out += r;
    write_file(out_path, out);
}

void run_fit_demo(const std::vector<double>& gt_vec, std::size_t steps, double lr,
                  const std::string& out_path, const GlobalOpts& opts) {
    if (gt_vec.size() != 4) {
        throw std::runtime_error("--gt-box expects cx,cy,w,h");
    }
    const Box gt{gt_vec[0], gt_vec[1], gt_vec[2], gt_vec[3]};
    validate_box(gt);
    const LossConfig cfg =
        make_loss_config(opts.lambda_iou, opts.lambda_l1, opts.lambda_gw);
    const FitResult result = fit_box(gt, std::nullopt, cfg, steps, lr, opts.seed);

    std::string out =
        "step,loss,iou_term,l1_term,gw_term,sigma2_cx,sigma2_cy,sigma2_w,sigma2_h\n";
    for (std::size_t s = 0; s < result.trace.size(); ++s) {
        const FitStep& rec = result.trace[s];
        out += format_u64(s);
        for (double v : {rec.loss, rec.iou_term, rec.l1_term, rec.gw_term,
                         rec.sigma2[0], rec.sigma2[1], rec.sigma2[2], rec.sigma2[3]}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    write_file(out_path, out);
}

void run_calibrate(const std::string& out_dir, std::size_t n_scenes,
                   std::size_t dets_per_scene, double noise, std::size_t x_bins,
                   std::size_t y_bins, const GlobalOpts& opts) {
    const auto scenes = gen_synthetic(opts.seed, n_scenes, dets_per_scene, noise);
    const CalibrationStats stats =
        calibration_experiment(scenes, opts.k, opts.threads);

    std::filesystem::create_directories(out_dir);

    std::string pairs_csv = "uncertainty,combined_metric,one_minus_iou\n";
    for (std::size_t i = 0; i < stats.uncertainty.size(); ++i) {
        pairs_csv += format_double(stats.uncertainty[i]);
        pairs_csv += ',';
        pairs_csv += format_double(stats.combined[i]);
        pairs_csv += ',';
        pairs_csv += format_double(stats.one_minus_iou[i]);
        pairs_csv += '\n';
    }

    std::vector<std::pair<double, double>> points;
    points.reserve(stats.uncertainty.size());
    for (std::size_t i = 0; i < stats.uncertainty.size(); ++i) {
        points.emplace_back(stats.combined[i], stats.uncertainty[i]);
    }
    const HeatmapGrid grid =
        heatmap_bins(points, x_bins, y_bins, 0.0, 1.0, 0.0, 1.0);
    std::string heatmap_csv = "x_lo,x_hi,y_lo,y_hi,count\n";
    for (std::size_t xi = 0; xi < x_bins; ++xi) {
        for (std::size_t yi = 0; yi < y_bins; ++yi) {
            heatmap_csv += format_double(grid.x_edges[xi]);
            heatmap_csv += ',';
            heatmap_csv += format_double(grid.x_edges[xi + 1]);
            heatmap_csv += ',';
            heatmap_csv += format_double(grid.y_edges[yi]);
            heatmap_csv += ',';
            heatmap_csv += format_double(grid.y_edges[yi + 1]);
            heatmap_csv += ',';
            heatmap_csv += format_u64(grid.counts[xi][yi]);
            heatmap_csv += '\n';
        }
    }

    std::string stats_csv = "name,value\n";
    stats_csv += "spearman_uncertainty_vs_error," +
                 format_double(stats.spearman_uncertainty_error) + "\n";
    stats_csv += "spearman_combined_vs_uncertainty," +
                 format_double(stats.spearman_combined_uncertainty) + "\n";
    stats_csv += "n_pairs," + format_u64(stats.uncertainty.size()) + "\n";
    stats_csv += "heatmap_dropped," + format_u64(grid.dropped) + "\n";

    const std::filesystem::path dir(out_dir);
    write_file((dir / "calibration.csv").string(), pairs_csv);
    write_file((dir / "heatmap.csv").string(), heatmap_csv);
    write_file((dir / "stats.csv").string(), stats_csv);
}

void run_counterexample(double tol, double min_gap, std::size_t max_trials,
                        const std::string& out_path, const GlobalOpts& opts) {
    const CounterexamplePair p =
        counterexample_search(opts.seed, tol, min_gap, max_trials);
    std::string out =
        "gt_cx,gt_cy,gt_w,gt_h,a_cx,a_cy,a_w,a_h,b_cx,b_cy,b_w,b_h,"
        "giou_gap,ciou_gap,gw_gap\n";
    bool first = true;
    for (double v : {p.gt.cx, p.gt.cy, p.gt.w, p.gt.h, p.pred_a.cx, p.pred_a.cy,
                     p.pred_a.w, p.pred_a.h, p.pred_b.cx, p.pred_b.cy, p.pred_b.w,
                     p.pred_b.h, p.giou_gap, p.ciou_gap, p.gw_gap}) {
        if (!first) out += ',';
        out += format_double(v);
        first = false;
    }
    out += '\n';
    write_file(out_path, out);
}

void run_eval(const std::string& gt_path, const std::string& det_path,
              const std::string& out_path, double iou_threshold) {
    const auto gts = load_ground_truths(gt_path);
    const auto dets = load_detections(det_path);
    const auto groups = group_by_image(gts, dets);

    std::vector<std::pair<std::size_t, ScoredBox>> det_pool;
    std::vector<std::pair<std::size_t, Box>> gt_pool;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (std::size_t i : groups[gi].det_indices) {
            det_pool.emplace_back(gi, ScoredBox{dets[i].score, dets[i].box});
        }
        for (std::size_t j : groups[gi].gt_indices) {
            gt_pool.emplace_back(gi, gts[j].box);
        }
    }
    const double ap = average_precision(det_pool, gt_pool, iou_threshold);

    std::string out = "name,value\n";
    out += "ap," + format_double(ap) + "\n";
    out += "iou_threshold," + format_double(iou_threshold) + "\n";
    out += "n_detections," + format_u64(dets.size()) + "\n";
    out += "n_ground_truths," + format_u64(gts.size()) + "\n";
    write_file(out_path, out);
}

}  // namespace

DetectionRecord parse_detection(const std::string& line, std::size_t line_no) {
    const json j = parse_line(line, line_no);
    DetectionRecord r;
    r.image_id = field_string(j, "image_id", line_no);
    r.class_id = field_class_id(j, line_no);
    r.score = field_number(require_field(j, "score", line_no), "score", line_no);
    if (r.score < 0.0 || r.score > 1.0) {
        throw ValidationError(line_no, "score", "must lie in [0, 1]");
    }
    r.box = field_box(j, line_no);
    r.sigma = field_vec4(j, "sigma", line_no);
    for (double s : r.sigma) {
        if (!(s > 0.0 && s <= 1.0)) {
            throw ValidationError(line_no, "sigma", "components must lie in (0, 1]");
        }
    }
    return r;
}

GroundTruthRecord parse_ground_truth(const std::string& line, std::size_t line_no) {
    const json j = parse_line(line, line_no);
    GroundTruthRecord r;
    r.image_id = field_string(j, "image_id", line_no);
    r.class_id = field_class_id(j, line_no);
    r.box = field_box(j, line_no);
    return r;
}

std::string serialize(const DetectionRecord& r) {
    json j;
    j["image_id"] = r.image_id;
    j["class_id"] = r.class_id;
    j["score"] = r.score;
    j["box"] = {r.box.cx, r.box.cy, r.box.w, r.box.h};
    j["sigma"] = r.sigma;
    return j.dump();
}

std::string serialize(const GroundTruthRecord& r) {
    json j;
    j["image_id"] = r.image_id;
    j["class_id"] = r.class_id;
    j["box"] = {r.box.cx, r.box.cy, r.box.w, r.box.h};
    return j.dump();
}

std::vector<DetectionRecord> load_detections(const std::string& path) {
    return load_records<DetectionRecord>(path, parse_detection);
}

std::vector<GroundTruthRecord> load_ground_truths(const std::string& path) {
    return load_records<GroundTruthRecord>(path, parse_ground_truth);
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"distributional bounding-box toolkit"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "random seed for seeded subcommands");
    app.add_option("--k", opts.k, "division count of the uncertainty algorithm");
    app.add_option("--lambda-iou", opts.lambda_iou, "GIoU loss weight");
    app.add_option("--lambda-l1", opts.lambda_l1, "L1 loss weight");
    app.add_option("--lambda-gw", opts.lambda_gw, "GW^2 loss weight");
    app.add_option("--threads", opts.threads,
                   "parallelism cap; outputs do not depend on it");

    std::string gt_path, det_path, out_path, out_dir;

    CLI::App* metric = app.add_subcommand(
        "metric", "per-pair overlap and distribution metrics");
    metric->fallthrough();
    metric->add_option("--gt", gt_path, "ground-truth JSONL")->required();
    metric->add_option("--det", det_path, "detection JSONL")->required();
    metric->add_option("--out", out_path, "output CSV")->required();

    bool per_class = false;
    CLI::App* match = app.add_subcommand(
        "match", "risk-refined one-to-one assignment per image");
    match->fallthrough();
    match->add_option("--gt", gt_path, "ground-truth JSONL")->required();
    match->add_option("--det", det_path, "detection JSONL")->required();
    match->add_option("--out", out_path, "output CSV")->required();
    match->add_flag("--per-class", per_class, "match within class groups only");

    CLI::App* uncertainty = app.add_subcommand(
        "uncertainty", "confidence-interval localization uncertainty");
    uncertainty->fallthrough();
    uncertainty->add_option("--det", det_path, "detection JSONL")->required();
    uncertainty->add_option("--out", out_path, "output CSV")->required();

    std::vector<double> gt_box{0.5, 0.5, 0.4, 0.2};
    std::size_t fit_steps = 5000;
    double fit_lr = 0.05;
    CLI::App* fit = app.add_subcommand(
        "fit-demo", "gradient-based box fit of the combined loss");
    fit->fallthrough();
    fit->add_option("--gt-box", gt_box, "target box cx,cy,w,h")
        ->delimiter(',')
        ->expected(4);
    fit->add_option("--steps", fit_steps, "optimization steps");
    fit->add_option("--lr", fit_lr, "initial per-coordinate step size");
    fit->add_option("--out", out_path, "trace CSV")->required();

    std::size_t n_scenes = 100, dets_per_scene = 10, x_bins = 10, y_bins = 10;
    double noise = 0.1;
    CLI::App* calibrate = app.add_subcommand(
        "calibrate", "synthetic uncertainty-reliability experiment");
    calibrate->fallthrough();
    calibrate->add_option("--out-dir", out_dir, "output directory")->required();
    calibrate->add_option("--scenes", n_scenes, "number of synthetic scenes");
    calibrate->add_option("--dets-per-scene", dets_per_scene, "detections per scene");
    calibrate->add_option("--noise", noise, "maximum perturbation scale");
    calibrate->add_option("--x-bins", x_bins, "heatmap bins along the combined metric");
    calibrate->add_option("--y-bins", y_bins, "heatmap bins along the uncertainty");

    double tol = 1e-6, min_gap = 0.01;
    std::size_t max_trials = 10000;
    CLI::App* counterexample = app.add_subcommand(
        "counterexample", "find boxes that overlap metrics cannot distinguish");
    counterexample->fallthrough();
    counterexample->add_option("--tol", tol, "maximum GIoU/CIoU gap");
    counterexample->add_option("--min-gap", min_gap, "minimum GW^2 gap");
    counterexample->add_option("--max-trials", max_trials, "trial budget");
    counterexample->add_option("--out", out_path, "output CSV")->required();

    double iou_threshold = 0.5;
    CLI::App* eval = app.add_subcommand(
        "eval", "single-threshold average precision");
    eval->fallthrough();
    eval->add_option("--gt", gt_path, "ground-truth JSONL")->required();
    eval->add_option("--det", det_path, "detection JSONL")->required();
    eval->add_option("--out", out_path, "output CSV")->required();
    eval->add_option("--iou-threshold", iou_threshold, "match threshold in (0, 1)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gwbox");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*metric) {
            run_metric(gt_path, det_path, out_path, opts);
        } else if (*match) {
            run_match(gt_path, det_path, out_path, per_class, opts);
        } else if (*uncertainty) {
            run_uncertainty(det_path, out_path, opts);
        } else if (*fit) {
            run_fit_demo(gt_box, fit_steps, fit_lr, out_path, opts);
        } else if (*calibrate) {
            run_calibrate(out_dir, n_scenes, dets_per_scene, noise, x_bins, y_bins,
                          opts);
        } else if (*counterexample) {
            run_counterexample(tol, min_gap, max_trials, out_path, opts);
        } else if (*eval) {
            run_eval(gt_path, det_path, out_path, iou_threshold);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gwbox::cli
