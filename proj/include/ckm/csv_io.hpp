#pragma once

#include "ckm/model.hpp"
#include "ckm/predictor.hpp"
#include "ckm/stats.hpp"

#include <string>
#include <vector>

namespace ckm {

// Metrics CSV: header "module,cbo,dit,lcom,noc,rfc,wmc", integer cells.
std::vector<MetricsRow> load_metrics_csv(const std::string& path);
void save_metrics_csv(const std::vector<MetricsRow>& rows, const std::string& path);

// Defects CSV: header "module,defects,fix_hours"; fix_hours optional,
// defaulting to 0.
std::vector<DefectRow> load_defects_csv(const std::string& path);
void save_defects_csv(const std::vector<DefectRow>& rows, const std::string& path);

// Coefficient CSV: header "term,B,std_error,beta,t,p", rows const,cbo,dit,
// lcom,noc,rfc,wmc. Full stored precision; doubles round-trip exactly.
void save_coefficients_csv(const RegressionResult& fit, const std::string& path);
PredictionModel load_prediction_model_csv(const std::string& path);

} // namespace ckm
