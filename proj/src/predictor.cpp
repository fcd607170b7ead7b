#include "ckm/predictor.hpp"

#include "ckm/error.hpp"

#include <algorithm>

namespace ckm {

PredictionModel PredictionModel::from_regression(const RegressionResult& fit) {
    if (fit.terms.size() != kPredictorOrder.size())
        throw LabelMismatch("prediction model needs exactly six predictors");
    PredictionModel model;
    model.intercept = fit.intercept;
    for (size_t j = 0; j < kPredictorOrder.size(); ++j) {
        if (fit.terms[j] != kPredictorOrder[j])
            throw LabelMismatch("predictor " + std::to_string(j) + " is '" +
                                fit.terms[j] + "', expected '" +
                                kPredictorOrder[j] + "'");
        model.coefficients[j] = fit.coefficients(static_cast<Eigen::Index>(j));
    }
    return model;
}

Prediction predict_defects(const PredictionModel& model, const MetricsRow& row) {
    double y = model.intercept;
    for (size_t j = 0; j < kPredictorOrder.size(); ++j)
        y += model.coefficients[j] *
             static_cast<double>(row.value(kPredictorOrder[j]));
    return {y, std::max(y, 0.0)};
}

EffortRate effort_rate(const std::vector<DefectRow>& history) {
    long long defects = 0;
    double hours = 0;
    for (const DefectRow& row : history) {
        defects += row.defects;
        hours += row.fix_hours;
    }
    if (defects <= 0)
        throw NoDefectsInHistory("history window has no defects");
    return {hours / static_cast<double>(defects),
            static_cast<int>(history.size())};
}

double estimate_fix_hours(const EffortRate& rate, double predicted_defects) {
    return rate.hours_per_defect * predicted_defects;
}

} // namespace ckm
