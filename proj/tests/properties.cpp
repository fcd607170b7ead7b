// Randomized property suites (1,000 cases each, fixed seeds so every run
// exercises the same inputs).

#include "ckm/distributions.hpp"
#include "ckm/error.hpp"
#include "ckm/lexer.hpp"
#include "ckm/metrics.hpp"
#include "ckm/model_io.hpp"
#include "ckm/parser.hpp"
#include "ckm/stats.hpp"
#include "ckm/thresholds.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

using namespace ckm;

namespace {

constexpr int kCases = 1000;

DesignMatrix random_design(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_dist(9, 30);
    std::uniform_int_distribution<int> p_dist(1, 4);
    std::normal_distribution<double> cell(0.0, 10.0);
    DesignMatrix d;
    int n = n_dist(rng);
    int p = p_dist(rng);
    d.predictors.resize(n, p);
    d.response.resize(n);
    for (int j = 0; j < p; ++j) d.names.push_back("x" + std::to_string(j));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) d.predictors(i, j) = cell(rng);
        d.response(i) = cell(rng);
    }
    return d;
}

// Small random class body: fields plus methods whose statements reference a
// subset of the fields and call a few helpers.
std::string random_program(std::mt19937& rng) {
    std::uniform_int_distribution<int> classes(1, 4);
    std::uniform_int_distribution<int> fields(0, 3);
    std::uniform_int_distribution<int> methods(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::ostringstream src;
    int n_classes = classes(rng);
    for (int c = 0; c < n_classes; ++c) {
        src << "class C" << c;
        if (c > 0 && coin(rng)) src << " extends C" << (c - 1);
        src << " { ";
        int n_fields = fields(rng);
        for (int f = 0; f < n_fields; ++f) src << "int f" << f << "; ";
        int n_methods = methods(rng);
        for (int m = 0; m < n_methods; ++m) {
            src << "void m" << m << "(int p0){ ";
            if (n_fields > 0 && coin(rng))
                src << "this.f" << (m % n_fields) << " = p0; ";
            if (coin(rng)) src << "helper(p0); ";
            if (coin(rng)) src << "Other o; o.run(1, 2); ";
            src << "} ";
        }
        src << "} ";
    }
    return src.str();
}

std::map<std::string, std::string> module_map_for(const ClassModel& partial,
                                                 const std::string& src) {
    std::map<std::string, std::string> map;
    (void)partial;
    for (int c = 0; c < 8; ++c) map["C" + std::to_string(c)] = "mod";
    (void)src;
    return map;
}

long long brute_force_lcom(const ClassInfo& cls) {
    long long p = 0, q = 0;
    for (size_t i = 0; i < cls.methods.size(); ++i)
        for (size_t j = i + 1; j < cls.methods.size(); ++j) {
            bool shares = false;
            for (const std::string& f : cls.methods[i].field_uses)
                if (cls.methods[j].field_uses.count(f)) shares = true;
            (shares ? q : p) += 1;
        }
    return p > q ? p - q : 0;
}

} // namespace

TEST_CASE("property: OLS residuals are orthogonal to every predictor") {
    std::mt19937 rng(20260801);
    int done = 0;
    while (done < kCases) {
        DesignMatrix d = random_design(rng);
        RegressionResult r;
        try {
            r = ols_fit(d);
        } catch (const SingularMatrix&) {
            continue; // astronomically unlikely, but not a property failure
        }
        double scale = std::max(1.0, d.response.cwiseAbs().maxCoeff());
        CHECK(std::fabs(r.residuals.sum()) / scale < 1e-8);
        for (Eigen::Index j = 0; j < d.predictors.cols(); ++j)
            CHECK(std::fabs(d.predictors.col(j).dot(r.residuals)) /
                      (scale * static_cast<double>(d.predictors.rows())) <
                  1e-8);
        ++done;
    }
}

TEST_CASE("property: t, p and beta are invariant under predictor rescaling") {
    std::mt19937 rng(20260802);
    std::uniform_real_distribution<double> factor(0.1, 50.0);
    int done = 0;
    while (done < kCases) {
        DesignMatrix d = random_design(rng);
        DesignMatrix scaled = d;
        std::vector<double> k(static_cast<size_t>(d.predictors.cols()));
        for (Eigen::Index j = 0; j < d.predictors.cols(); ++j) {
            k[static_cast<size_t>(j)] = factor(rng);
            scaled.predictors.col(j) *= k[static_cast<size_t>(j)];
        }
        RegressionResult a, b;
        try {
            a = ols_fit(d);
            b = ols_fit(scaled);
        } catch (const SingularMatrix&) {
            continue;
        }
        for (Eigen::Index j = 0; j < d.predictors.cols(); ++j) {
            size_t sj = static_cast<size_t>(j);
            CHECK(b.coefficients(j) * k[sj] ==
                  doctest::Approx(a.coefficients(j)).epsilon(1e-8));
            CHECK(b.t_values(j + 1) ==
                  doctest::Approx(a.t_values(j + 1)).epsilon(1e-7));
            CHECK(std::fabs(b.p_values(j + 1) - a.p_values(j + 1)) < 1e-9);
            CHECK(b.standardized_betas(j) ==
                  doctest::Approx(a.standardized_betas(j)).epsilon(1e-7));
        }
        CHECK(std::fabs(b.r2 - a.r2) < 1e-10);
        ++done;
    }
}

TEST_CASE("property: partitions cover every module exactly once") {
    std::mt19937 rng(20260803);
    std::uniform_int_distribution<int> n_dist(1, 25);
    std::uniform_int_distribution<long long> v_dist(0, 500);
    std::uniform_real_distribution<double> cut_dist(0.0, 500.0);
    std::uniform_int_distribution<int> shape(0, 2);
    for (int t = 0; t < kCases; ++t) {
        int n = n_dist(rng);
        std::vector<MetricsRow> rows(static_cast<size_t>(n));
        std::vector<DefectRow> defects(static_cast<size_t>(n));
        long long defect_total = 0;
        for (int i = 0; i < n; ++i) {
            rows[i].module = defects[i].module = "m" + std::to_string(i);
            rows[i].rfc = v_dist(rng);
            defects[i].defects = v_dist(rng) % 40;
            defect_total += defects[i].defects;
        }
        CutSpec cuts;
        cuts.metric = Metric::RFC;
        double c1 = cut_dist(rng), c2 = cut_dist(rng);
        if (shape(rng) == 0) {
            cuts.c1 = c1;
        } else {
            cuts.c1 = std::min(c1, c2);
            cuts.c2 = std::max(c1, c2);
        }
        RegionReport r = partition(rows, defects, Metric::RFC, cuts);
        std::set<std::string> seen;
        size_t covered = 0;
        long long defect_seen = 0, metric_seen = 0;
        for (const RegionBin& bin : r.bins) {
            covered += bin.modules.size();
            defect_seen += bin.defect_sum;
            metric_seen += bin.metric_sum;
            for (const std::string& name : bin.modules)
                CHECK(seen.insert(name).second);
        }
        CHECK(covered == rows.size());
        CHECK(defect_seen == defect_total);
        long long metric_total = 0;
        for (const MetricsRow& row : rows) metric_total += row.rfc;
        CHECK(metric_seen == metric_total);
    }
}

TEST_CASE("property: lcom matches brute force, clamps, and ignores method order") {
    std::mt19937 rng(20260804);
    std::uniform_int_distribution<int> m_dist(0, 7);
    std::uniform_int_distribution<int> f_dist(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < kCases; ++t) {
        ClassInfo cls;
        cls.name = "R";
        int n_fields = f_dist(rng);
        for (int f = 0; f < n_fields; ++f) {
            FieldInfo fi;
            fi.name = "f" + std::to_string(f);
            fi.type = "int";
            cls.fields.push_back(fi);
        }
        int n_methods = m_dist(rng);
        for (int m = 0; m < n_methods; ++m) {
            MethodInfo mi;
            mi.name = "m" + std::to_string(m);
            for (int f = 0; f < n_fields; ++f)
                if (coin(rng)) mi.field_uses.insert("f" + std::to_string(f));
            cls.methods.push_back(mi);
        }
        long long value = lcom(cls);
        CHECK(value >= 0);
        CHECK(value == brute_force_lcom(cls));

        ClassInfo shuffled = cls;
        std::shuffle(shuffled.methods.begin(), shuffled.methods.end(), rng);
        CHECK(lcom(shuffled) == value);
    }
}

TEST_CASE("property: parsing is deterministic and comment-insensitive") {
    std::mt19937 rng(20260805);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < kCases; ++t) {
        std::string src = random_program(rng);
        auto first = parse_unit(tokenize(src), "gen.java");
        auto second = parse_unit(tokenize(src), "gen.java");
        CHECK(first == second);

        // inject comments and extra whitespace between every token
        std::ostringstream noisy;
        for (const Token& tok : tokenize(src)) {
            if (coin(rng)) noisy << "/* pad */ ";
            if (coin(rng)) noisy << "\n// line\n";
            noisy << tok.text << ' ';
        }
        auto third = parse_unit(tokenize(noisy.str()), "gen.java");
        CHECK(third == first);

        ClassModel model = build_class_model({first}, module_map_for({}, src));
        ClassModel again = build_class_model({second}, module_map_for({}, src));
        CHECK(model == again);
    }
}

TEST_CASE("property: interchange save/load is the identity") {
    std::mt19937 rng(20260806);
    for (int t = 0; t < kCases; ++t) {
        std::string src = random_program(rng);
        ClassModel model = build_class_model({parse_unit(tokenize(src), "gen.java")},
                                             module_map_for({}, src));
        std::stringstream buf;
        save_model_stream(model, buf);
        ClassModel loaded = load_model_stream(buf, "buffer");
        CHECK(loaded == model);
    }
}
