#pragma once

#include <filesystem>
#include <iosfwd>

#include "fatou/pseudogroup.hpp"
#include "fatou/verifier.hpp"

#include "json.hpp"

// Declarative scenario execution: a strict-schema JSON config describes
// foliation/region/form/family tuples (or pseudogroup extension scenarios)
// with expected verdicts; runs emit one machine-readable report per scenario
// plus a summary. Reports are byte-reproducible for a fixed seed apart from
// the wall-time field.

namespace fatou::scenario {

using json = nlohmann::ordered_json;

struct RunOptions {
    std::filesystem::path out_dir;
    std::uint64_t seed = 20240607ULL;
    int jobs = 1;
    double timeout_seconds = 60.0;
    // Tolerance overrides (negative = keep scenario/default value).
    double invariance_tol = -1.0;
    double c_min = -1.0;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 scenario failure, 2 config error
    json summary;
};

/// Parses the config (strict: unknown keys are fatal), runs every scenario,
/// writes <id>.report.json files plus summary.json under out_dir.
RunResult run_config(const std::filesystem::path& config_path, const RunOptions& opts);
RunResult run_config_json(const json& config, const RunOptions& opts);

/// Exit code 0 iff every scenario reached its expected verdict.
int exit_code_of(const json& summary);

enum class GridQuantity { Eq215Abs, FValue, MetricRatio, MultiplierField };

struct GridSpec {
    GridQuantity quantity = GridQuantity::FValue;
    int resolution = 200;            // per axis; capped at 4096
    double lo1 = 1e-2, hi1 = 2.0;    // first axis range
    double lo2 = 1e-2, hi2 = 2.0;    // second axis range
    Complex lambda{0.0, 1.0};        // Eq215Abs / MultiplierField parameter
    Complex mu{1.0, 0.0};
};

/// Row-major CSV with a header row; a sidecar metadata JSON documents the
/// columns and ranges.
void grid_export(std::ostream& csv, const GridSpec& spec);
json grid_metadata(const GridSpec& spec);

/// Serialization helpers shared by the CLI and tests.
json verdict_to_json(const verify::Verdict& v);
json extension_report_to_json(const pg::ExtensionReport& rep);
json counterexamples_to_json();

}  // namespace fatou::scenario
