#include "ckm/distributions.hpp"

#include "ckm/error.hpp"

#include <cmath>
#include <string>

namespace ckm {

namespace {

// Continued fraction for I_x(a,b), evaluated with the modified Lentz
// algorithm. Valid (and quickly convergent) for x < (a+1)/(a+b+2).
double beta_cont_fraction(double x, double a, double b) {
    constexpr double tiny = 1e-30;
    constexpr double eps = 1e-16;
    constexpr int max_iter = 500;

    double f = 1.0, c = 1.0, d = 0.0;
    for (int i = 0; i <= max_iter; ++i) {
        int m = i / 2;
        double numerator;
        if (i == 0)
            numerator = 1.0;
        else if (i % 2 == 0)
            numerator = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
        else
            numerator = -(a + m) * (a + b + m) * x / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));

        d = 1.0 + numerator * d;
        if (std::fabs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = 1.0 + numerator / c;
        if (std::fabs(c) < tiny) c = tiny;
        double delta = c * d;
        f *= delta;
        if (std::fabs(1.0 - delta) < eps) break;
    }
    return f;
}

} // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("incomplete beta requires a > 0 and b > 0, got a=" +
                          std::to_string(a) + " b=" + std::to_string(b));
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("incomplete beta requires x in [0,1], got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - regularized_incomplete_beta(1.0 - x, b, a);

    double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta) / a;
    return front * (beta_cont_fraction(x, a, b) - 1.0);
}

double student_t_two_sided_p(double t, int df) {
    if (df < 1) throw DomainError("t distribution needs df >= 1");
    if (t == 0.0) return 1.0;
    double x = df / (df + t * t);
    return regularized_incomplete_beta(x, df / 2.0, 0.5);
}

double f_upper_tail_p(double f, int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("F distribution needs positive df");
    if (f < 0.0) throw DomainError("F statistic must be nonnegative");
    if (f == 0.0) return 1.0;
    double x = d2 / (d2 + d1 * f);
    return regularized_incomplete_beta(x, d2 / 2.0, d1 / 2.0);
}

} // namespace ckm
