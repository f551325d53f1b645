#pragma once

namespace varex {

double norm_pdf(double x);
double norm_cdf(double x);

/// Inverse standard normal CDF. Rational approximation polished with one
/// Halley step; accurate to a few ulp over (0,1).
double norm_quantile(double p);

double lbeta(double a, double b);
double beta_pdf(double x, double a, double b);

/// Regularized lower incomplete gamma P(a,x).
double reg_gamma_p(double a, double x);

/// Regularized incomplete beta I_x(a,b).
double reg_beta_i(double x, double a, double b);

double binom_coeff(int n, int k);

}  // namespace varex
