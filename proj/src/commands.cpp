#include "ckm/commands.hpp"

#include "ckm/csv_io.hpp"
#include "ckm/error.hpp"
#include "ckm/model_io.hpp"
#include "ckm/parser.hpp"
#include "ckm/predictor.hpp"
#include "ckm/report.hpp"
#include "ckm/stats.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace ckm {

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
}

void check_module_sets_match(const std::vector<MetricsRow>& rows,
                             const std::vector<DefectRow>& defects) {
    std::set<std::string> metric_mods, defect_mods;
    for (const MetricsRow& r : rows) metric_mods.insert(r.module);
    for (const DefectRow& d : defects) defect_mods.insert(d.module);
    for (const std::string& m : metric_mods)
        if (!defect_mods.count(m))
            throw MissingDefects(m + " has metrics but no defect row");
    for (const std::string& m : defect_mods)
        if (!metric_mods.count(m))
            throw MissingDefects(m + " has defects but no metrics row");
}

struct CutSelection {
    std::optional<Vendor> vendor_column;
    std::optional<std::pair<double, std::optional<double>>> user;
};

CutSelection parse_threshold_flag(const std::string& flag) {
    CutSelection sel;
    if (flag.empty() || flag == "paper" || flag == "default") return sel;
    if (flag.rfind("user:", 0) == 0) {
        std::string spec = flag.substr(5);
        auto comma = spec.find(',');
        try {
            if (comma == std::string::npos) {
                sel.user = {std::stod(spec), std::nullopt};
            } else {
                double c1 = std::stod(spec.substr(0, comma));
                double c2 = std::stod(spec.substr(comma + 1));
                if (!(c1 < c2))
                    throw SchemaError("--thresholds user cuts need c1 < c2");
                sel.user = {c1, c2};
            }
        } catch (const std::invalid_argument&) {
            throw SchemaError("--thresholds user cuts must be numeric: " + flag);
        }
        return sel;
    }
    if (flag == "rosenberg") sel.vendor_column = Vendor::RosenbergNasa;
    else if (flag == "sdmetrics") sel.vendor_column = Vendor::SdMetrics;
    else if (flag == "togethersoft") sel.vendor_column = Vendor::TogetherSoft;
    else if (flag == "objecteering") sel.vendor_column = Vendor::Objecteering;
    else
        throw SchemaError("unknown --thresholds value: " + flag);
    return sel;
}

CutSpec cuts_for(Metric metric, const std::vector<MetricsRow>& rows,
                 const CutSelection& sel) {
    if (sel.user) {
        CutSpec spec;
        spec.metric = metric;
        spec.c1 = sel.user->first;
        spec.c2 = sel.user->second;
        spec.provenance = CutProvenance::User;
        return spec;
    }
    if (sel.vendor_column) {
        VendorThresholds vendor;
        std::optional<double> thr = vendor.threshold(metric, *sel.vendor_column);
        std::vector<double> column;
        double sum = 0;
        for (const MetricsRow& r : rows)
            sum += static_cast<double>(r.value(metric_key(metric)));
        double mean = sum / static_cast<double>(rows.size());
        CutSpec spec;
        spec.metric = metric;
        if (thr) {
            spec.c1 = std::min(*thr, mean);
            spec.c2 = std::max(*thr, mean);
            spec.provenance = CutProvenance::VendorMean;
        } else {
            spec.c1 = mean;
            spec.provenance = CutProvenance::MinMeanMax;
        }
        return spec;
    }
    return default_cuts(metric, rows);
}

std::vector<RegionReport> build_region_reports(const std::vector<MetricsRow>& rows,
                                               const std::vector<DefectRow>& defects,
                                               const CutSelection& sel) {
    std::vector<RegionReport> reports;
    for (Metric m : all_metrics())
        reports.push_back(partition(rows, defects, m, cuts_for(m, rows, sel)));
    return reports;
}

void write_plot_data(const std::vector<MetricsRow>& rows,
                     const std::vector<RegionReport>& reports,
                     const fs::path& plot_dir) {
    fs::create_directories(plot_dir);
    for (const RegionReport& report : reports) {
        std::ostringstream dat;
        for (size_t i = 0; i < rows.size(); ++i)
            dat << i + 1 << " " << rows[i].value(metric_key(report.metric)) << "\n";
        write_file(plot_dir / (metric_key(report.metric) + ".dat"), dat.str());

        std::ostringstream cuts;
        cuts << fmt_fixed(report.cuts.c1, 6) << "\n";
        if (report.cuts.c2) cuts << fmt_fixed(*report.cuts.c2, 6) << "\n";
        write_file(plot_dir / (metric_key(report.metric) + ".cuts"), cuts.str());
    }
}

RegressionResult fit_from_tables(const std::vector<MetricsRow>& rows,
                                 const std::vector<DefectRow>& defects) {
    check_module_sets_match(rows, defects);
    std::map<std::string, long long> defect_by_module;
    for (const DefectRow& d : defects) defect_by_module[d.module] = d.defects;

    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    DesignMatrix design;
    design.predictors.resize(n, 6);
    design.response.resize(n);
    design.names.assign(kPredictorOrder.begin(), kPredictorOrder.end());
    for (Eigen::Index i = 0; i < n; ++i) {
        const MetricsRow& r = rows[static_cast<size_t>(i)];
        for (Eigen::Index j = 0; j < 6; ++j)
            design.predictors(i, j) =
                static_cast<double>(r.value(kPredictorOrder[static_cast<size_t>(j)]));
        design.response(i) = static_cast<double>(defect_by_module.at(r.module));
    }
    return ols_fit(design);
}

} // namespace

void apply_agg_override(AggregationPolicy& policy, const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw SchemaError("--agg expects metric=rule, got '" + spec + "'");
    std::string metric = spec.substr(0, eq);
    std::string rule_name = spec.substr(eq + 1);
    AggRule rule;
    if (rule_name == "sum") rule = AggRule::Sum;
    else if (rule_name == "max") rule = AggRule::Max;
    else if (rule_name == "mean") rule = AggRule::MeanRounded;
    else throw SchemaError("unknown aggregation rule '" + rule_name + "'");

    if (metric == "wmc") policy.wmc = rule;
    else if (metric == "dit") policy.dit = rule;
    else if (metric == "noc") policy.noc = rule;
    else if (metric == "cbo") policy.cbo = rule;
    else if (metric == "rfc") policy.rfc = rule;
    else if (metric == "lcom") policy.lcom = rule;
    else throw SchemaError("unknown metric '" + metric + "' in --agg");
}

int exit_status_for(const Error& e) {
    if (e.code() == "SingularMatrix" || e.code() == "DomainError") return 3;
    return 2;
}

int cmd_parse(const std::string& src_dir, const std::string& module_map_path,
              const std::string& out_model_path, std::ostream& out) {
    std::vector<fs::path> sources;
    if (fs::is_directory(src_dir)) {
        for (const fs::directory_entry& entry : fs::directory_iterator(src_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".java")
                sources.push_back(entry.path());
    }
    std::sort(sources.begin(), sources.end());
    if (sources.empty()) throw IoError("no source files in " + src_dir);

    std::vector<std::vector<ClassInfo>> units;
    for (const fs::path& path : sources)
        units.push_back(parse_unit(tokenize(read_file(path)), path.string()));

    ClassModel model = build_class_model(units, load_module_map_csv(module_map_path));
    save_model_file(model, out_model_path);
    out << "parsed " << sources.size() << " files, " << model.classes.size()
        << " classes -> " << out_model_path << "\n";
    return 0;
}

int cmd_metrics(const std::string& model_path, const std::string& out_csv,
                const RunOptions& options, std::ostream& out) {
    ClassModel model = load_model_file(model_path);
    std::vector<MetricsRow> rows = aggregate_modules(model, options.aggregation);
    save_metrics_csv(rows, out_csv);
    out << "wrote " << rows.size() << " module rows -> " << out_csv << "\n";
    return 0;
}

int cmd_regions(const std::string& metrics_csv, const std::string& defects_csv,
                const RunOptions& options, std::ostream& out) {
    std::vector<MetricsRow> rows = load_metrics_csv(metrics_csv);
    std::vector<DefectRow> defects = load_defects_csv(defects_csv);
    check_module_sets_match(rows, defects);

    CutSelection sel = parse_threshold_flag(options.thresholds);
    std::vector<RegionReport> reports = build_region_reports(rows, defects, sel);

    fs::path dir(options.out_dir);
    std::string region_text = render_region_report(reports);
    std::string errata_text = render_errata(reports);
    write_file(dir / "regions.txt", region_text);
    write_file(dir / "errata.txt", errata_text);
    write_plot_data(rows, reports, dir / "plots");

    out << region_text << "\n" << errata_text;
    return 0;
}

int cmd_regress(const std::string& metrics_csv, const std::string& defects_csv,
                const RunOptions& options, std::ostream& out) {
    std::vector<MetricsRow> rows = load_metrics_csv(metrics_csv);
    std::vector<DefectRow> defects = load_defects_csv(defects_csv);
    RegressionResult fit = fit_from_tables(rows, defects);

    fs::path dir(options.out_dir);
    std::string text = render_model_summary(fit) + "\n" + render_anova(fit) + "\n" +
                       render_coefficients(fit);
    write_file(dir / "regression.txt", text);
    save_coefficients_csv(fit, (dir / "coefficients.csv").string());
    out << text;
    return 0;
}

int cmd_predict(const std::string& model_csv, const std::string& metrics_csv,
                const std::string& defects_history_csv, const RunOptions& options,
                std::ostream& out) {
    PredictionModel model = load_prediction_model_csv(model_csv);
    std::vector<MetricsRow> rows = load_metrics_csv(metrics_csv);
    EffortRate rate = effort_rate(load_defects_csv(defects_history_csv));

    std::ostringstream csv;
    csv << "module,predicted_defects,predicted_defects_floored,estimated_fix_hours\n";
    for (const MetricsRow& row : rows) {
        Prediction p = predict_defects(model, row);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s,%.6f,%.6f,%.6f\n", row.module.c_str(),
                      p.raw, p.floored, estimate_fix_hours(rate, p.floored));
        csv << buf;
    }
    write_file(fs::path(options.out_dir) / "predictions.csv", csv.str());
    out << csv.str();
    return 0;
}

int cmd_report_paper(const std::string& fixtures_dir, const RunOptions& options,
                     std::ostream& out) {
    fs::path fixtures(fixtures_dir);
    std::vector<MetricsRow> rows =
        load_metrics_csv((fixtures / "table4_metrics.csv").string());
    std::vector<DefectRow> defects =
        load_defects_csv((fixtures / "table4_defects.csv").string());
    check_module_sets_match(rows, defects);

    fs::path dir(options.out_dir);
    fs::create_directories(dir);

    write_file(dir / "Table5.txt", render_summary_table(rows, defects));

    RegressionResult fit = fit_from_tables(rows, defects);
    write_file(dir / "Table7.txt", render_model_summary(fit));
    write_file(dir / "Table8.txt", render_anova(fit));
    write_file(dir / "Table9.txt", render_coefficients(fit));
    save_coefficients_csv(fit, (dir / "coefficients.csv").string());

    std::vector<RegionReport> reports = build_region_reports(rows, defects, {});
    write_file(dir / "Table6_recomputed.txt",
               render_recomputed_summary(reports) + "\n" +
                   render_region_report(reports));
    write_file(dir / "errata.txt", render_errata(reports));
    write_plot_data(rows, reports, dir / "plots");

    out << "report written to " << dir.string() << "\n";
    return 0;
}

} // namespace ckm
