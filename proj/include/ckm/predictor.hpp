#pragma once

#include "ckm/model.hpp"
#include "ckm/stats.hpp"

#include <array>
#include <string>
#include <vector>

namespace ckm {

inline constexpr std::array<const char*, 6> kPredictorOrder = {
    "cbo", "dit", "lcom", "noc", "rfc", "wmc",
};

struct PredictionModel {
    double intercept = 0;
    std::array<double, 6> coefficients{}; // kPredictorOrder labels

    static PredictionModel from_regression(const RegressionResult& fit);
};

struct Prediction {
    double raw = 0;     // may be negative; honest model output
    double floored = 0; // max(raw, 0), for planning arithmetic
};

Prediction predict_defects(const PredictionModel& model, const MetricsRow& row);

struct EffortRate {
    double hours_per_defect = 0;
    int window_modules = 0;
};

// Global historical hours-per-defect ratio. Throws NoDefectsInHistory when
// the window has zero total defects.
EffortRate effort_rate(const std::vector<DefectRow>& history);

double estimate_fix_hours(const EffortRate& rate, double predicted_defects);

} // namespace ckm
