#include "rsc/params.hpp"

#include "rsc/errors.hpp"

#include <cmath>

namespace rsc {

ProbVector ProbVector::of(std::vector<Rational> values) {
    ProbVector pv{std::move(values)};
    pv.validate();
    return pv;
}

ProbVector ProbVector::uniform(int r, const Rational& v) {
    if (r < 0) throw DomainError("ProbVector: r must be >= 0");
    ProbVector pv{std::vector<Rational>(static_cast<std::size_t>(r) + 1, v)};
    pv.validate();
    return pv;
}

void ProbVector::validate() const {
    if (p.empty()) throw DomainError("ProbVector: empty");
    for (const auto& x : p)
        if (x < 0 || x > 1)
            throw DomainError("ProbVector: entry " + rat_str(x) + " outside [0,1]");
}

void GibbsParams::validate() const {
    if (beta.empty() || beta.size() != gamma.size())
        throw DomainError("GibbsParams: beta and gamma must have equal nonzero length");
}

void ExponentVector::validate() const {
    if (alpha.empty()) throw DomainError("ExponentVector: empty");
    for (const auto& a : alpha)
        if (a < 0) throw DomainError("ExponentVector: entry " + rat_str(a) + " negative");
}

ProbVector ExponentVector::to_probs(long long n) const {
    validate();
    if (n < 1) throw DomainError("ExponentVector::to_probs: n must be >= 1");
    std::vector<Rational> p;
    p.reserve(alpha.size());
    for (const auto& a : alpha) {
        double v = std::pow(static_cast<double>(n), -a.get_d());
        if (v > 1.0) v = 1.0;
        if (v < 0.0) v = 0.0;
        p.emplace_back(v); // exact dyadic value of the double
    }
    return ProbVector::of(std::move(p));
}

} // namespace rsc
