#pragma once

#include <functional>

namespace qbound {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Standard normal CDF.
double normal_cdf(double z);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}  // namespace qbound
