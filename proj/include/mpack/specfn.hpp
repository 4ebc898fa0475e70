#pragma once

namespace mpack {

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Chi-square CDF with k degrees of freedom: P(k/2, x/2).
// Power series for x < k+1, Lentz continued fraction otherwise;
// term tolerance 1e-14, iteration cap 1e4.
double chi2_cdf(double k, double x);

// Regularized incomplete beta I_x(a, b) (Lentz continued fraction).
double beta_inc(double a, double b, double x);

}  // namespace mpack
