#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace ckm {

struct Summary {
    double min = 0, max = 0, median = 0, mean = 0, sample_std = 0;
    int n = 0;
    bool degenerate = false; // n == 1: sample std undefined, reported as 0
};

// min/max/median/mean and the (n-1)-denominator standard deviation.
// Even-n median averages the two middle order statistics.
// Throws EmptyInput.
Summary describe(const std::vector<double>& values);

struct AnovaBlock {
    double ss_regression = 0, ss_residual = 0, ss_total = 0;
    int df_regression = 0, df_residual = 0;
    double ms_regression = 0, ms_residual = 0;
    double f_value = 0, f_pvalue = 1;
};

struct RegressionResult {
    double intercept = 0;
    std::vector<std::string> terms; // predictor names, coefficient order
    Eigen::VectorXd coefficients;   // per predictor (intercept excluded)
    Eigen::VectorXd std_errors;     // per term including intercept, [0] = const
    Eigen::VectorXd standardized_betas;
    Eigen::VectorXd t_values;       // including intercept, [0] = const
    Eigen::VectorXd p_values;
    double intercept_std_error = 0, intercept_t = 0, intercept_p = 1;
    double r2 = 0, adj_r2 = 0, r = 0;
    double std_error_estimate = 0;
    AnovaBlock anova;
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
};

// Predictor columns plus response, aligned row-wise; the intercept column
// is implicit. Requires n > p + 1 and full column rank.
struct DesignMatrix {
    Eigen::MatrixXd predictors; // n x p
    Eigen::VectorXd response;   // n
    std::vector<std::string> names; // p predictor labels
};

// OLS with inference: coefficients via column-pivoted QR (no explicit
// normal-equation inverse on the solve path), standard errors from
// ms_residual * diag((X'X)^-1), two-sided t p-values, standardized betas,
// R^2 / adjusted R^2 and the ANOVA F test.
// Throws InsufficientRows and SingularMatrix.
RegressionResult ols_fit(const DesignMatrix& design);

} // namespace ckm
