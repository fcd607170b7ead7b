#include "ckm/commands.hpp"
#include "ckm/error.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"CK design-metrics toolchain: parse sources, compute the six "
                 "CK metrics, run threshold-region and regression analyses, "
                 "predict defects and regenerate the bundled study report"};
    app.require_subcommand(1);

    ckm::RunOptions options;
    std::vector<std::string> agg_overrides;
    app.add_option("--out", options.out_dir, "Output directory")
        ->capture_default_str();
    app.add_option("--format", options.format, "Report format: text|csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    app.add_option("--thresholds", options.thresholds,
                   "Cut-point source: rosenberg|sdmetrics|togethersoft|"
                   "objecteering or user:c1[,c2]");
    app.add_option("--agg", agg_overrides,
                   "Aggregation override metric=sum|max|mean (repeatable)");

    std::string src_dir, module_map, model_path, metrics_csv, defects_csv,
        model_csv, history_csv, fixtures_dir = "fixtures";

    CLI::App* parse = app.add_subcommand("parse", "Parse sources into a class model");
    parse->add_option("src_dir", src_dir)->required();
    parse->add_option("module_map", module_map)->required();
    parse->add_option("out_model", model_path)->required();

    CLI::App* metrics = app.add_subcommand("metrics", "Compute per-module CK metrics");
    metrics->add_option("model", model_path)->required();
    metrics->add_option("out_csv", metrics_csv)->required();

    CLI::App* regions = app.add_subcommand("regions", "Threshold-region defect analysis");
    regions->add_option("metrics_csv", metrics_csv)->required();
    regions->add_option("defects_csv", defects_csv)->required();

    CLI::App* regress = app.add_subcommand("regress", "OLS defect regression with inference");
    regress->add_option("metrics_csv", metrics_csv)->required();
    regress->add_option("defects_csv", defects_csv)->required();

    CLI::App* predict = app.add_subcommand("predict", "Score modules with a fitted model");
    predict->add_option("model_csv", model_csv)->required();
    predict->add_option("metrics_csv", metrics_csv)->required();
    predict->add_option("history_csv", history_csv)->required();

    CLI::App* report = app.add_subcommand(
        "report-paper", "Regenerate the bundled study tables from the fixtures");
    report->add_option("--fixtures", fixtures_dir, "Fixture directory")
        ->capture_default_str();

    // let the shared flags (--out, --format, ...) appear after a subcommand
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        for (const std::string& spec : agg_overrides)
            ckm::apply_agg_override(options.aggregation, spec);

        if (parse->parsed())
            return ckm::cmd_parse(src_dir, module_map, model_path, std::cout);
        if (metrics->parsed())
            return ckm::cmd_metrics(model_path, metrics_csv, options, std::cout);
        if (regions->parsed())
            return ckm::cmd_regions(metrics_csv, defects_csv, options, std::cout);
        if (regress->parsed())
            return ckm::cmd_regress(metrics_csv, defects_csv, options, std::cout);
        if (predict->parsed())
            return ckm::cmd_predict(model_csv, metrics_csv, history_csv, options,
                                    std::cout);
        if (report->parsed())
            return ckm::cmd_report_paper(fixtures_dir, options, std::cout);
    } catch (const ckm::Error& e) {
        std::cerr << e.what() << "\n";
        return ckm::exit_status_for(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
