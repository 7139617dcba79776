#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gwbox/geometry.hpp"

namespace gwbox::cli {

/// One detection line of a JSON Lines input file.
struct DetectionRecord {
    std::string image_id;
    int class_id = 0;
    double score = 0.0;
    Box box;
    std::array<double, 4> sigma{};
};

/// One ground-truth line of a JSON Lines input file.
struct GroundTruthRecord {
    std::string image_id;
    int class_id = 0;
    Box box;
};

/// Parses one JSONL line; `line_no` is 1-based and used in error reports.
/// Throws ValidationError on malformed lines or invariant violations.
DetectionRecord parse_detection(const std::string& line, std::size_t line_no);
GroundTruthRecord parse_ground_truth(const std::string& line, std::size_t line_no);

/// Serializes a record back to one JSONL line. Numeric fields survive a
/// parse/serialize round trip exactly (shortest round-trip formatting).
std::string serialize(const DetectionRecord& r);
std::string serialize(const GroundTruthRecord& r);

std::vector<DetectionRecord> load_detections(const std::string& path);
std::vector<GroundTruthRecord> load_ground_truths(const std::string& path);

/// Shortest decimal representation that parses back to exactly `v`.
std::string format_double(double v);

/// Entry point of the command-line tool. Returns 0 on success, 1 on
/// validation errors, 2 on usage errors. All outputs are deterministic
/// functions of the inputs, the flags, and --seed; --threads only caps
/// parallelism and never changes an output byte.
int run(const std::vector<std::string>& args);

}  // namespace gwbox::cli
