#include "rsc/stats.hpp"

#include "rsc/errors.hpp"

#include <cmath>
#include <limits>

namespace rsc {
namespace stats {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-14;

// Lower incomplete gamma by power series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz continued fraction, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw DomainError("gamma_p: requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw DomainError("gamma_q: requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_stat(std::span<const long long> observed,
                       std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw DomainError("chi_square_stat: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw DomainError("chi_square_stat: nonpositive expected count");
        const double diff = static_cast<double>(observed[i]) - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

double chi_square_pvalue(double stat, int df) {
    if (df < 1) throw DomainError("chi_square_pvalue: df must be >= 1");
    if (stat < 0.0) throw DomainError("chi_square_pvalue: negative statistic");
    return gamma_q(df / 2.0, stat / 2.0);
}

double binom_cdf(long long k, long long n, double p) {
    if (n < 0 || p < 0.0 || p > 1.0) throw DomainError("binom_cdf: bad parameters");
    if (k < 0) return 0.0;
    if (k >= n) return 1.0;
    if (p == 0.0) return 1.0;
    if (p == 1.0) return 0.0; // k < n here
    double sum = 0.0;
    const double lp = std::log(p), lq = std::log1p(-p);
    const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
    for (long long j = 0; j <= k; ++j) {
        const double lj = lgn - std::lgamma(static_cast<double>(j) + 1.0) -
                          std::lgamma(static_cast<double>(n - j) + 1.0) +
                          static_cast<double>(j) * lp + static_cast<double>(n - j) * lq;
        sum += std::exp(lj);
    }
    return std::min(sum, 1.0);
}

} // namespace stats
} // namespace rsc
