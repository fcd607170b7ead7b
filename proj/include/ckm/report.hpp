#pragma once

#include "ckm/stats.hpp"
#include "ckm/thresholds.hpp"

#include <string>
#include <vector>

namespace ckm {

// Text renderings mirror the reference study's table layout and print
// precision; the CSV twins written by the commands keep full precision.

std::string render_summary_table(const std::vector<MetricsRow>& rows,
                                 const std::vector<DefectRow>& defects);

std::string render_model_summary(const RegressionResult& fit);   // Table 7 shape
std::string render_anova(const RegressionResult& fit);           // Table 8 shape
std::string render_coefficients(const RegressionResult& fit);    // Table 9 shape

std::string render_region_report(const std::vector<RegionReport>& reports);
std::string render_recomputed_summary(const std::vector<RegionReport>& reports);
std::string render_errata(const std::vector<RegionReport>& reports);

// SPSS-style fixed formatting: three decimals, leading zero stripped for
// |v| < 1 (".688", "-.652").
std::string fmt_spss3(double v);
std::string fmt_fixed(double v, int decimals);

} // namespace ckm
