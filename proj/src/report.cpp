#include "ckm/report.hpp"

#include "ckm/stats.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace ckm {

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fmt_spss3(double v) {
    std::string s = fmt_fixed(v, 3);
    if (s.rfind("0.", 0) == 0) return s.substr(1);
    if (s.rfind("-0.", 0) == 0) return "-" + s.substr(2);
    return s;
}

namespace {

void row(std::ostringstream& os, const std::vector<std::string>& cells,
         const std::vector<int>& widths) {
    for (size_t i = 0; i < cells.size(); ++i)
        os << (i ? "  " : "") << std::setw(widths[i])
           << (i == 0 ? std::left : std::right) << cells[i]
           << std::right;
    os << "\n";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

} // namespace

std::string render_summary_table(const std::vector<MetricsRow>& rows,
                                 const std::vector<DefectRow>& defects) {
    std::ostringstream os;
    os << "Analysis of data\n\n";
    const std::vector<int> w = {8, 9, 9, 9, 9, 9};
    row(os, {"", "Min", "Max", "Median", "Average", "Std. Dev"}, w);
    for (Metric m : all_metrics()) {
        std::vector<double> column;
        for (const MetricsRow& r : rows)
            column.push_back(static_cast<double>(r.value(metric_key(m))));
        Summary s = describe(column);
        row(os,
            {metric_name(m), fmt_fixed(s.min, 1), fmt_fixed(s.max, 1),
             fmt_fixed(s.median, 1), fmt_fixed(s.mean, 1),
             fmt_fixed(s.sample_std, 1)},
            w);
    }
    std::vector<double> defect_column;
    for (const DefectRow& d : defects)
        defect_column.push_back(static_cast<double>(d.defects));
    Summary s = describe(defect_column);
    row(os,
        {"Defects", fmt_fixed(s.min, 1), fmt_fixed(s.max, 1),
         fmt_fixed(s.median, 1), fmt_fixed(s.mean, 1), fmt_fixed(s.sample_std, 1)},
        w);
    return os.str();
}

std::string render_model_summary(const RegressionResult& fit) {
    std::ostringstream os;
    os << "Summary of the Model\n\n";
    const std::vector<int> w = {5, 6, 8, 17, 26};
    row(os, {"Model", "R", "R Square", "Adjusted R Square",
             "Std. Error of the Estimate"}, w);
    row(os, {"1", fmt_spss3(fit.r), fmt_spss3(fit.r2), fmt_spss3(fit.adj_r2),
             fmt_fixed(fit.std_error_estimate, 5)}, w);
    return os.str();
}

std::string render_anova(const RegressionResult& fit) {
    const AnovaBlock& a = fit.anova;
    std::ostringstream os;
    os << "ANOVA\n\n";
    const std::vector<int> w = {12, 14, 4, 12, 7, 6};
    row(os, {"", "Sum of Squares", "df", "Mean Square", "F", "Sig."}, w);
    row(os, {"Regression", fmt_fixed(a.ss_regression, 3),
             std::to_string(a.df_regression), fmt_fixed(a.ms_regression, 3),
             fmt_fixed(a.f_value, 3), fmt_spss3(a.f_pvalue)}, w);
    row(os, {"Residual", fmt_fixed(a.ss_residual, 3),
             std::to_string(a.df_residual), fmt_fixed(a.ms_residual, 3)}, w);
    row(os, {"Total", fmt_fixed(a.ss_total, 3),
             std::to_string(a.df_regression + a.df_residual)}, w);
    return os.str();
}

std::string render_coefficients(const RegressionResult& fit) {
    std::ostringstream os;
    os << "Individual Regression Coefficients\n\n";
    const std::vector<int> w = {12, 9, 11, 7, 8, 6};
    row(os, {"", "B", "Std. Error", "Beta", "t", "Sig."}, w);
    row(os, {"(Constant)", fmt_fixed(fit.intercept, 3),
             fmt_fixed(fit.intercept_std_error, 3), "",
             fmt_spss3(fit.intercept_t), fmt_spss3(fit.intercept_p)}, w);
    for (size_t j = 0; j < fit.terms.size(); ++j) {
        Eigen::Index i = static_cast<Eigen::Index>(j);
        std::string name = fit.terms[j];
        for (char& c : name) c = static_cast<char>(std::toupper(c));
        row(os, {name, fmt_spss3(fit.coefficients(i)),
                 fmt_spss3(fit.std_errors(i + 1)),
                 fmt_spss3(fit.standardized_betas(i)),
                 fmt_spss3(fit.t_values(i + 1)), fmt_spss3(fit.p_values(i + 1))}, w);
    }
    return os.str();
}

std::string render_region_report(const std::vector<RegionReport>& reports) {
    std::ostringstream os;
    for (const RegionReport& report : reports) {
        const std::string name = metric_name(report.metric);
        os << "== " << name << " ==\n";
        os << "cuts: " << fmt_fixed(report.cuts.c1, 2);
        if (report.cuts.c2) os << ", " << fmt_fixed(*report.cuts.c2, 2);
        if (report.cuts_merged) os << " (nearly coincident, treated as one line)";
        os << "\n";
        for (const RegionBin& bin : report.bins) {
            os << "  " << bin.label << "\n";
            os << "    modules: "
               << (bin.modules.empty() ? "(none)" : join(bin.modules, ", ")) << "\n";
            os << "    X = " << bin.defect_sum << "  Y = " << bin.metric_sum
               << "  X/Y = "
               << (bin.ratio ? fmt_fixed(*bin.ratio, 2) : "UNDEFINED") << "\n";
        }
        if (report.recommended >= 0) {
            const RegionBin& best = report.bins[report.recommended];
            os << "  recommended: " << best.label << " at "
               << fmt_fixed(best.ratio.value(), 2) << "/" << name << "\n";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_recomputed_summary(const std::vector<RegionReport>& reports) {
    std::ostringstream os;
    os << "Summary of the Results (recomputed from the dataset)\n\n";
    const std::vector<int> w = {7, 28, 18};
    row(os, {"Metric", "Findings", "Defect"}, w);
    for (const RegionReport& report : reports) {
        if (report.recommended < 0) continue;
        const RegionBin& best = report.bins[report.recommended];
        row(os, {metric_name(report.metric), best.label,
                 fmt_fixed(best.ratio.value(), 2) + "/" + metric_name(report.metric)},
            w);
    }
    return os.str();
}

std::string render_errata(const std::vector<RegionReport>& reports) {
    std::ostringstream os;
    os << "Errata: published values that disagree with sums recomputed from "
          "the dataset\n\n";
    std::vector<Erratum> errata = compute_errata(reports);
    if (errata.empty()) {
        os << "(none)\n";
    } else {
        for (const Erratum& e : errata)
            os << metric_name(e.metric) << ": " << e.description << "\n";
    }

    os << "\nRecommendation changes under corrected arithmetic:\n";
    bool any = false;
    for (const RegionReport& report : reports) {
        for (const PublishedRecommendation& pub : published_recommendations()) {
            if (pub.metric != report.metric) continue;
            if (report.recommended >= 0 && report.recommended != pub.bin) {
                os << metric_name(report.metric) << ": published range "
                   << pub.range << ", recomputed "
                   << report.bins[report.recommended].label << "\n";
                any = true;
            }
        }
    }
    if (!any) os << "(none)\n";
    return os.str();
}

} // namespace ckm
