#pragma once

#include "ckm/error.hpp"
#include "ckm/metrics.hpp"
#include "ckm/thresholds.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace ckm {

// Shared command options, filled from CLI flags.
struct RunOptions {
    std::string out_dir = "out";
    std::string format = "text"; // text | csv
    // --thresholds: "", a vendor column name (rosenberg|sdmetrics|
    // togethersoft|objecteering) or "user:c1[,c2]".
    std::string thresholds;
    AggregationPolicy aggregation;
};

// Parses "--agg metric=rule" into the policy. Throws SchemaError.
void apply_agg_override(AggregationPolicy& policy, const std::string& spec);

// Each command returns the process exit status: 0 success. Failures are
// thrown as ckm::Error; the CLI maps them to 2 (input/validation) or
// 3 (numerical failure) via exit_status_for.
int exit_status_for(const Error& e);

int cmd_parse(const std::string& src_dir, const std::string& module_map_path,
              const std::string& out_model_path, std::ostream& out);

int cmd_metrics(const std::string& model_path, const std::string& out_csv,
                const RunOptions& options, std::ostream& out);

int cmd_regions(const std::string& metrics_csv, const std::string& defects_csv,
                const RunOptions& options, std::ostream& out);

int cmd_regress(const std::string& metrics_csv, const std::string& defects_csv,
                const RunOptions& options, std::ostream& out);

int cmd_predict(const std::string& model_csv, const std::string& metrics_csv,
                const std::string& defects_history_csv, const RunOptions& options,
                std::ostream& out);

int cmd_report_paper(const std::string& fixtures_dir, const RunOptions& options,
                     std::ostream& out);

} // namespace ckm
