#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgap/bounds.hpp"
#include "fgap/groups.hpp"

namespace fgap {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
    std::string preset;
    int max_word_length = 10;
    double ball_radius = 3.0;
    OutputFormat format = OutputFormat::Text;
    std::string svg_path; // empty = no figure
    // recognized key: "point_dedup_tol" (fixed-point dedup distance)
    std::map<std::string, double> tolerance_overrides;
};

// Full outcome of one verification run; everything the CLI serializes.
struct VerifyReport {
    std::string preset;
    int depth = 0;
    double radius = 0.0;
    std::size_t element_count = 0;
    std::size_t elliptic_point_count = 0;
    std::optional<GapResult> gap;
    std::optional<double> systole_estimate;
    int systole_depth = 0;
    std::string systole_caveat;
    std::vector<BoundReport> checks;
    bool overall_pass = true;
    bool not_applicable = false;
    std::vector<std::string> warnings;
    std::map<std::string, double> tolerances;
};

VerifyReport run_verify(const RunConfig& cfg, ExecPolicy pol = ExecPolicy::Parallel);
// The point set backing a report's figure (same pipeline, same config).
EllipticPointSet harvest_points(const RunConfig& cfg, ExecPolicy pol = ExecPolicy::Parallel);

std::string to_json(const VerifyReport& report);
VerifyReport report_from_json(const std::string& text);
std::string to_csv(const VerifyReport& report);
std::string to_text(const VerifyReport& report);
std::string serialize(const VerifyReport& report, OutputFormat format);

// 0: all applicable checks pass; 1: some bound failed. (2 is the CLI's
// usage-error code.)
int exit_code(const VerifyReport& report);

// One-element record for the classify command.
std::string classify_record(const GroupElement& g, OutputFormat format);

} // namespace fgap
