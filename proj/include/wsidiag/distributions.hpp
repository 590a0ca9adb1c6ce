#pragma once

namespace wsidiag {

// Distribution functions backing the hypothesis tests. Everything is
// implemented on top of std::erfc and the regularized incomplete beta
// function; accuracy is validated against a quadrature oracle in the test
// suite (absolute error well below 1e-6 over the working range).

/// Standard normal CDF, Phi(x) = erfc(-x / sqrt(2)) / 2.
double normal_cdf(double x);

/// Inverse standard normal CDF for p in (0, 1). Acklam's rational
/// approximation refined with one Halley step against normal_cdf.
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
/// x in [0, 1], by the Lentz continued-fraction expansion.
double regularized_incomplete_beta(double a, double b, double x);

/// Student's t CDF with df > 0 degrees of freedom (fractional df allowed),
/// via I_x(df/2, 1/2) with x = df / (df + t^2).
double t_cdf(double t, double df);

/// Inverse t CDF for p in (0, 1), by bracketed bisection on t_cdf.
double t_quantile(double p, double df);

}  // namespace wsidiag
