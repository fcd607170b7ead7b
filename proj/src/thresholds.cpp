#include "ckm/thresholds.hpp"

#include "ckm/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ckm {

const std::vector<Metric>& all_metrics() {
    static const std::vector<Metric> metrics = {Metric::CBO,  Metric::DIT,
                                                Metric::LCOM, Metric::NOC,
                                                Metric::RFC,  Metric::WMC};
    return metrics;
}

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::CBO: return "CBO";
    case Metric::DIT: return "DIT";
    case Metric::LCOM: return "LCOM";
    case Metric::NOC: return "NOC";
    case Metric::RFC: return "RFC";
    case Metric::WMC: return "WMC";
    }
    return "?";
}

std::string metric_key(Metric m) {
    std::string s = metric_name(m);
    for (char& c : s) c = static_cast<char>(std::tolower(c));
    return s;
}

std::optional<Metric> metric_from_key(const std::string& key) {
    for (Metric m : all_metrics())
        if (metric_key(m) == key || metric_name(m) == key) return m;
    return std::nullopt;
}

std::optional<double> VendorThresholds::threshold(Metric m, Vendor v) const {
    switch (v) {
    case Vendor::RosenbergNasa:
        switch (m) {
        case Metric::WMC: return 40;
        case Metric::DIT: return 6;
        case Metric::CBO: return 5;
        case Metric::RFC: return 100;
        default: return std::nullopt;
        }
    case Vendor::SdMetrics:
        switch (m) {
        case Metric::DIT: return 3;   // 0-3
        case Metric::CBO: return 31;  // 0-31
        case Metric::RFC: return 365; // 3-365
        default: return std::nullopt;
        }
    case Vendor::TogetherSoft:
        switch (m) {
        case Metric::WMC: return 100;
        case Metric::DIT: return 4;
        case Metric::CBO: return 30;
        default: return std::nullopt;
        }
    case Vendor::Objecteering:
        switch (m) {
        case Metric::WMC: return 7;  // 3-7
        case Metric::DIT: return 4;  // 0-4
        case Metric::NOC: return 4;  // 1-4
        case Metric::CBO: return 4;  // 1-4
        default: return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<double> VendorThresholds::default_threshold(Metric m) const {
    switch (m) {
    case Metric::CBO:
    case Metric::DIT:
    case Metric::WMC:
        return threshold(m, Vendor::TogetherSoft);
    case Metric::RFC:
        return threshold(m, Vendor::SdMetrics);
    case Metric::LCOM:
    case Metric::NOC:
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

struct ColumnStats {
    double min = 0, max = 0, mean = 0;
};

ColumnStats column_stats(Metric metric, const std::vector<MetricsRow>& rows) {
    ColumnStats s;
    s.min = s.max = static_cast<double>(rows.front().value(metric_key(metric)));
    double sum = 0;
    for (const MetricsRow& r : rows) {
        double v = static_cast<double>(r.value(metric_key(metric)));
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    s.mean = sum / static_cast<double>(rows.size());
    return s;
}

// Report-style number: integers print bare, anything else with two decimals
// (matches the reference tables: 4.61, 32.28, 4119.72).
std::string fmt_cut(double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(v);
        return os.str();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

CutSpec default_cuts(Metric metric, const std::vector<MetricsRow>& rows,
                     const VendorThresholds& vendor) {
    if (rows.empty()) throw EmptyInput("default_cuts needs at least one row");
    ColumnStats stats = column_stats(metric, rows);

    CutSpec spec;
    spec.metric = metric;
    if (std::optional<double> thr = vendor.default_threshold(metric)) {
        spec.c1 = std::min(*thr, stats.mean);
        spec.c2 = std::max(*thr, stats.mean);
        spec.provenance = CutProvenance::VendorMean;
        spec.in_range = spec.c1 >= stats.min && *spec.c2 <= stats.max;
    } else {
        spec.c1 = stats.mean;
        spec.provenance = CutProvenance::MinMeanMax;
        spec.in_range = spec.c1 >= stats.min && spec.c1 <= stats.max;
    }
    return spec;
}

std::optional<double> region_ratio(const RegionBin& bin) {
    if (bin.modules.empty() || bin.metric_sum == 0) return std::nullopt;
    return static_cast<double>(bin.defect_sum) / static_cast<double>(bin.metric_sum);
}

RegionReport partition(const std::vector<MetricsRow>& rows,
                       const std::vector<DefectRow>& defects, Metric metric,
                       const CutSpec& cuts, double merge_tolerance) {
    if (rows.empty()) throw EmptyInput("partition needs at least one row");

    std::map<std::string, long long> defect_by_module;
    for (const DefectRow& d : defects) defect_by_module[d.module] = d.defects;
    for (const MetricsRow& r : rows)
        if (!defect_by_module.count(r.module)) throw MissingDefects(r.module);

    ColumnStats stats = column_stats(metric, rows);

    std::vector<double> effective_cuts = {cuts.c1};
    bool merged = false;
    if (cuts.c2) {
        double scale = std::max(std::fabs(cuts.c1), std::fabs(*cuts.c2));
        if (*cuts.c2 - cuts.c1 <= merge_tolerance * scale)
            merged = true; // lines indistinguishable, single cut at c1
        else
            effective_cuts.push_back(*cuts.c2);
    }

    RegionReport report;
    report.metric = metric;
    report.cuts = cuts;
    report.cuts_merged = merged;

    const std::string name = metric_name(metric);
    std::vector<double> edges = {stats.min};
    edges.insert(edges.end(), effective_cuts.begin(), effective_cuts.end());
    edges.push_back(stats.max);
    for (size_t b = 0; b + 1 < edges.size(); ++b) {
        RegionBin bin;
        bin.lo = edges[b];
        bin.hi = edges[b + 1];
        bin.hi_closed = b + 2 == edges.size();
        bin.label = fmt_cut(bin.lo) + " < " + name + " < " + fmt_cut(bin.hi);
        report.bins.push_back(std::move(bin));
    }

    for (const MetricsRow& r : rows) {
        double v = static_cast<double>(r.value(metric_key(metric)));
        size_t b = 0;
        while (b < effective_cuts.size() && v >= effective_cuts[b]) ++b;
        RegionBin& bin = report.bins[b];
        bin.modules.push_back(r.module);
        bin.defect_sum += defect_by_module.at(r.module);
        bin.metric_sum += r.value(metric_key(metric));
    }
    for (RegionBin& bin : report.bins)
        bin.ratio = region_ratio(bin);

    try {
        report.recommended = recommend(report);
    } catch (const AllUndefined&) {
        report.recommended = -1;
    }
    return report;
}

int recommend(const RegionReport& report) {
    int best = -1;
    for (size_t i = 0; i < report.bins.size(); ++i) {
        const std::optional<double>& ratio = report.bins[i].ratio;
        if (!ratio) continue;
        if (best < 0 || *ratio < *report.bins[best].ratio)
            best = static_cast<int>(i);
    }
    if (best < 0)
        throw AllUndefined("no bin has a defined defect ratio for " +
                           metric_name(report.metric));
    return best;
}

std::vector<Erratum> compute_errata(const std::vector<RegionReport>& reports) {
    std::vector<Erratum> out;
    for (Metric m : all_metrics()) {
        const RegionReport* report = nullptr;
        for (const RegionReport& r : reports)
            if (r.metric == m) report = &r;
        if (!report) continue;

        std::vector<std::string> issues;
        for (const PublishedRegion& pub : published_regions()) {
            if (pub.metric != m) continue;
            if (pub.bin >= static_cast<int>(report->bins.size())) continue;
            const RegionBin& bin = report->bins[pub.bin];

            bool transposed = bin.defect_sum == pub.metric_sum &&
                              bin.metric_sum == pub.defect_sum &&
                              bin.defect_sum != bin.metric_sum;
            if (transposed) {
                issues.push_back("region " + bin.label + ": published sums X=" +
                                 std::to_string(pub.defect_sum) + " Y=" +
                                 std::to_string(pub.metric_sum) +
                                 " are transposed (recomputed X=" +
                                 std::to_string(bin.defect_sum) + " Y=" +
                                 std::to_string(bin.metric_sum) + ")");
                continue;
            }
            if (bin.defect_sum != pub.defect_sum || bin.metric_sum != pub.metric_sum) {
                issues.push_back("region " + bin.label + ": recomputed X=" +
                                 std::to_string(bin.defect_sum) + " Y=" +
                                 std::to_string(bin.metric_sum) + ", published X=" +
                                 std::to_string(pub.defect_sum) + " Y=" +
                                 std::to_string(pub.metric_sum));
                continue;
            }
            // Sums agree; check the published quotient at print precision.
            if (bin.ratio && std::fabs(*bin.ratio - pub.ratio) > 0.011) {
                char buf[64];
                std::snprintf(buf, sizeof buf,
                              "region %s: recomputed ratio %.3f, published %.2f",
                              bin.label.c_str(), *bin.ratio, pub.ratio);
                issues.push_back(buf);
            }
        }
        if (!issues.empty()) {
            std::string joined;
            for (const std::string& s : issues) {
                if (!joined.empty()) joined += "; ";
                joined += s;
            }
            out.push_back({m, joined});
        }
    }
    return out;
}

} // namespace ckm
