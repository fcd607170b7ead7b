#include "ckm/stats.hpp"

#include "ckm/distributions.hpp"
#include "ckm/error.hpp"

#include <algorithm>
#include <cmath>

namespace ckm {

Summary describe(const std::vector<double>& values) {
    if (values.empty()) throw EmptyInput("describe needs at least one value");

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();

    Summary s;
    s.n = static_cast<int>(n);
    s.min = sorted.front();
    s.max = sorted.back();
    s.median = (n % 2 == 1) ? sorted[n / 2]
                            : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    double sum = 0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(n);

    if (n == 1) {
        s.sample_std = 0;
        s.degenerate = true;
        return s;
    }
    double ss = 0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.sample_std = std::sqrt(ss / static_cast<double>(n - 1));
    return s;
}

namespace {

double sample_std_of(const Eigen::VectorXd& v) {
    double mean = v.mean();
    return std::sqrt((v.array() - mean).square().sum() / (v.size() - 1));
}

} // namespace

RegressionResult ols_fit(const DesignMatrix& design) {
    const Eigen::Index n = design.predictors.rows();
    const Eigen::Index p = design.predictors.cols();
    if (design.response.size() != n)
        throw InsufficientRows("response length does not match predictor rows");
    if (n <= p + 1)
        throw InsufficientRows("need n > p + 1 rows, got n=" + std::to_string(n) +
                               " p=" + std::to_string(p));

    Eigen::MatrixXd X(n, p + 1);
    X.col(0).setOnes();
    X.rightCols(p) = design.predictors;
    const Eigen::VectorXd& y = design.response;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < p + 1)
        throw SingularMatrix("rank-deficient design matrix (constant or "
                             "collinear predictor column)");

    RegressionResult r;
    Eigen::VectorXd beta = qr.solve(y);
    r.fitted = X * beta;
    r.residuals = y - r.fitted;
    r.terms = design.names;
    r.intercept = beta(0);
    r.coefficients = beta.tail(p);

    const double y_mean = y.mean();
    r.anova.ss_total = (y.array() - y_mean).square().sum();
    r.anova.ss_residual = r.residuals.squaredNorm();
    r.anova.ss_regression = (r.fitted.array() - y_mean).square().sum();
    r.anova.df_regression = static_cast<int>(p);
    r.anova.df_residual = static_cast<int>(n - p - 1);
    r.anova.ms_regression = r.anova.ss_regression / r.anova.df_regression;
    r.anova.ms_residual = r.anova.ss_residual / r.anova.df_residual;
    r.anova.f_value = r.anova.ms_regression / r.anova.ms_residual;
    r.anova.f_pvalue =
        f_upper_tail_p(r.anova.f_value, r.anova.df_regression, r.anova.df_residual);

    r.r2 = r.anova.ss_regression / r.anova.ss_total;
    r.adj_r2 = 1.0 - (1.0 - r.r2) * (n - 1.0) / (n - p - 1.0);
    r.r = std::sqrt(std::max(r.r2, 0.0));
    r.std_error_estimate = std::sqrt(r.anova.ms_residual);

    // Coefficient covariance diagonal; the solve above stays on the QR path.
    Eigen::MatrixXd xtx_inv =
        (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(p + 1, p + 1));
    Eigen::VectorXd se_all =
        (r.anova.ms_residual * xtx_inv.diagonal().array()).sqrt();

    r.std_errors = se_all;
    r.t_values.resize(p + 1);
    r.p_values.resize(p + 1);
    for (Eigen::Index j = 0; j <= p; ++j) {
        r.t_values(j) = beta(j) / se_all(j);
        r.p_values(j) = student_t_two_sided_p(r.t_values(j), r.anova.df_residual);
    }
    r.intercept_std_error = se_all(0);
    r.intercept_t = r.t_values(0);
    r.intercept_p = r.p_values(0);

    const double s_y = sample_std_of(y);
    r.standardized_betas.resize(p);
    for (Eigen::Index j = 0; j < p; ++j)
        r.standardized_betas(j) =
            r.coefficients(j) * sample_std_of(design.predictors.col(j)) / s_y;

    return r;
}

} // namespace ckm
