#pragma once

namespace hermix {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a),
// absolute accuracy 1e-10 over the supported range. Series for x < a + 1,
// Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);

// Regularized incomplete beta I_x(a, b), absolute accuracy 1e-10.
// Continued fraction with the symmetry switch at x > (a+1)/(a+b+2).
double regularized_beta(double a, double b, double x);

double log_gamma(double x);

}  // namespace hermix
