#include "ckm/csv_io.hpp"

#include "ckm/error.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ckm {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::string& expected_header,
                                               size_t min_cols, size_t max_cols) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw SchemaError(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header = split_csv_line(line);
    std::vector<std::string> expected = split_csv_line(expected_header);
    for (size_t i = 0; i < std::min(header.size(), min_cols); ++i)
        if (header[i] != expected[i])
            throw SchemaError(path + ": expected header '" + expected_header +
                              "', got '" + line + "'");
    if (header.size() < min_cols || header.size() > max_cols)
        throw SchemaError(path + ": expected header '" + expected_header + "'");

    std::vector<std::vector<std::string>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() < min_cols || cells.size() > max_cols)
            throw SchemaError(path + ":" + std::to_string(line_no) +
                              ": wrong column count");
        rows.push_back(std::move(cells));
    }
    return rows;
}

long long parse_int(const std::string& cell, const std::string& where) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw SchemaError(where + ": not an integer: '" + cell + "'");
    if (v < 0) throw SchemaError(where + ": negative value: '" + cell + "'");
    return v;
}

double parse_real(const std::string& cell, const std::string& where) {
    try {
        size_t used = 0;
        double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw SchemaError(where + ": not a number: '" + cell + "'");
    }
}

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::vector<MetricsRow> load_metrics_csv(const std::string& path) {
    std::vector<MetricsRow> out;
    for (const auto& cells : read_csv(path, "module,cbo,dit,lcom,noc,rfc,wmc", 7, 7)) {
        MetricsRow r;
        r.module = cells[0];
        r.cbo = parse_int(cells[1], path);
        r.dit = parse_int(cells[2], path);
        r.lcom = parse_int(cells[3], path);
        r.noc = parse_int(cells[4], path);
        r.rfc = parse_int(cells[5], path);
        r.wmc = parse_int(cells[6], path);
        out.push_back(std::move(r));
    }
    return out;
}

void save_metrics_csv(const std::vector<MetricsRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "module,cbo,dit,lcom,noc,rfc,wmc\n";
    for (const MetricsRow& r : rows)
        out << r.module << ',' << r.cbo << ',' << r.dit << ',' << r.lcom << ','
            << r.noc << ',' << r.rfc << ',' << r.wmc << '\n';
}

std::vector<DefectRow> load_defects_csv(const std::string& path) {
    std::vector<DefectRow> out;
    for (const auto& cells : read_csv(path, "module,defects,fix_hours", 2, 3)) {
        DefectRow r;
        r.module = cells[0];
        r.defects = parse_int(cells[1], path);
        r.fix_hours = cells.size() > 2 ? parse_real(cells[2], path) : 0.0;
        if (r.fix_hours < 0) throw SchemaError(path + ": negative fix_hours");
        out.push_back(std::move(r));
    }
    return out;
}

void save_defects_csv(const std::vector<DefectRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "module,defects,fix_hours\n";
    for (const DefectRow& r : rows)
        out << r.module << ',' << r.defects << ',' << fmt_full(r.fix_hours) << '\n';
}

void save_coefficients_csv(const RegressionResult& fit, const std::string& path) {
    if (fit.terms.size() + 1 != static_cast<size_t>(fit.std_errors.size()))
        throw LabelMismatch("regression result term/std_error size mismatch");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "term,B,std_error,beta,t,p\n";
    out << "const," << fmt_full(fit.intercept) << ',' << fmt_full(fit.intercept_std_error)
        << ",," << fmt_full(fit.intercept_t) << ',' << fmt_full(fit.intercept_p) << '\n';
    for (size_t j = 0; j < fit.terms.size(); ++j) {
        Eigen::Index i = static_cast<Eigen::Index>(j);
        out << fit.terms[j] << ',' << fmt_full(fit.coefficients(i)) << ','
            << fmt_full(fit.std_errors(i + 1)) << ','
            << fmt_full(fit.standardized_betas(i)) << ','
            << fmt_full(fit.t_values(i + 1)) << ',' << fmt_full(fit.p_values(i + 1))
            << '\n';
    }
}

PredictionModel load_prediction_model_csv(const std::string& path) {
    auto rows = read_csv(path, "term,B,std_error,beta,t,p", 2, 6);
    if (rows.size() != 7)
        throw LabelMismatch(path + ": expected 7 rows (const + six metrics), got " +
                            std::to_string(rows.size()));
    if (rows[0][0] != "const")
        throw LabelMismatch(path + ": first term must be 'const', got '" +
                            rows[0][0] + "'");
    PredictionModel model;
    model.intercept = parse_real(rows[0][1], path);
    for (size_t j = 0; j < kPredictorOrder.size(); ++j) {
        if (rows[j + 1][0] != kPredictorOrder[j])
            throw LabelMismatch(path + ": term " + std::to_string(j + 1) +
                                " must be '" + kPredictorOrder[j] + "', got '" +
                                rows[j + 1][0] + "'");
        model.coefficients[j] = parse_real(rows[j + 1][1], path);
    }
    return model;
}

} // namespace ckm
