#pragma once

namespace ckm {

// Regularized incomplete beta I_x(a, b) for x in [0,1], a > 0, b > 0,
// evaluated with Lentz's continued fraction and the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a). Absolute error below 1e-10 over the
// supported domain. Throws DomainError outside it.
double regularized_incomplete_beta(double x, double a, double b);

// P(|T| >= |t|) for Student t with df degrees of freedom.
double student_t_two_sided_p(double t, int df);

// P(F >= f) for the F distribution with (d1, d2) degrees of freedom.
double f_upper_tail_p(double f, int d1, int d2);

} // namespace ckm
