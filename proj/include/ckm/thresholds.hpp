#pragma once

#include "ckm/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ckm {

enum class Metric { CBO, DIT, LCOM, NOC, RFC, WMC };

const std::vector<Metric>& all_metrics();
std::string metric_name(Metric m);       // upper case, report style
std::string metric_key(Metric m);        // lower case, CSV column
std::optional<Metric> metric_from_key(const std::string& key);

enum class Vendor { RosenbergNasa, SdMetrics, TogetherSoft, Objecteering };

// Vendor cut points; range-valued entries contribute their upper bound.
struct VendorThresholds {
    // The per-metric vendor the regional analysis defaults to
    // (TogetherSoft for CBO/DIT/WMC, SD-Metrics for RFC, none for LCOM/NOC).
    std::optional<double> default_threshold(Metric m) const;
    std::optional<double> threshold(Metric m, Vendor v) const;
};

enum class CutProvenance { VendorMean, MinMeanMax, User };

struct CutSpec {
    Metric metric = Metric::CBO;
    double c1 = 0;
    std::optional<double> c2;
    CutProvenance provenance = CutProvenance::VendorMean;
    bool in_range = true; // cuts inside [dataset min, dataset max]
};

// Vendor threshold present: cuts = sorted {vendor, mean} (three regions).
// Otherwise the single cut is the dataset mean (two regions).
CutSpec default_cuts(Metric metric, const std::vector<MetricsRow>& rows,
                     const VendorThresholds& vendor = {});

struct RegionBin {
    double lo = 0, hi = 0;
    bool hi_closed = false; // top bin closes at the dataset max
    std::string label;      // "lo < METRIC < hi" render
    std::vector<std::string> modules;
    long long defect_sum = 0; // X
    long long metric_sum = 0; // Y
    std::optional<double> ratio; // X/Y, empty when undefined
};

struct RegionReport {
    Metric metric = Metric::CBO;
    CutSpec cuts;
    bool cuts_merged = false; // near-coincident cut lines collapsed into one
    std::vector<RegionBin> bins;
    int recommended = -1;
};

// Bins are [min, c1), [c1, c2), [c2, max]; a module exactly at a cut falls
// in the higher bin. Cut lines closer than merge_tolerance (relative to the
// larger cut) are treated as a single line at c1, the convention the
// reference analysis uses when a vendor bound and the dataset mean almost
// coincide. Throws MissingDefects when a module has no defect row.
RegionReport partition(const std::vector<MetricsRow>& rows,
                       const std::vector<DefectRow>& defects, Metric metric,
                       const CutSpec& cuts, double merge_tolerance = 0.1);

// X/Y for one bin; empty optional when the bin has no members or Y == 0.
std::optional<double> region_ratio(const RegionBin& bin);

// Index of the bin with the minimum defined ratio, ties toward the lower
// range. Throws AllUndefined.
int recommend(const RegionReport& report);

struct Erratum {
    Metric metric = Metric::CBO;
    std::string description;
};

// Published per-region values from the reference study, for the errata
// comparison against recomputed bins.
struct PublishedRegion {
    Metric metric;
    int bin = 0; // index into the recomputed report's bins
    long long defect_sum = 0;
    long long metric_sum = 0;
    double ratio = 0;
};

struct PublishedRecommendation {
    Metric metric;
    int bin = 0;
    std::string range;
};

const std::vector<PublishedRegion>& published_regions();
const std::vector<PublishedRecommendation>& published_recommendations();

// Divergences between recomputed reports and the published figures, one
// entry per metric. Ratios are compared with a half-unit-in-last-printed-
// digit style tolerance so rounding differences are not flagged.
std::vector<Erratum> compute_errata(const std::vector<RegionReport>& reports);

} // namespace ckm
