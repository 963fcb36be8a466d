#pragma once

#include <span>

namespace rsc {
namespace stats {

/// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Pearson statistic sum (obs - exp)^2 / exp.
double chi_square_stat(std::span<const long long> observed, std::span<const double> expected);

/// Upper-tail p-value of the chi-square distribution with df degrees of
/// freedom: Q(df/2, x/2).
double chi_square_pvalue(double stat, int df);

/// P(X <= k) for X ~ Binomial(n, p).
double binom_cdf(long long k, long long n, double p);

} // namespace stats
} // namespace rsc
