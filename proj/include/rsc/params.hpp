#pragma once

#include "rsc/rational.hpp"

#include <vector>

namespace rsc {

/// Per-level retention probabilities p = (p_0, ..., p_r), 0 <= p_i <= 1.
struct ProbVector {
    std::vector<Rational> p;

    int r() const { return static_cast<int>(p.size()) - 1; }
    Rational q(int i) const { return Rational(1) - p[static_cast<std::size_t>(i)]; }
    const Rational& at(int i) const { return p[static_cast<std::size_t>(i)]; }
    double p_d(int i) const { return p[static_cast<std::size_t>(i)].get_d(); }

    static ProbVector of(std::vector<Rational> values);
    static ProbVector uniform(int r, const Rational& v);
    void validate() const; // throws DomainError outside [0,1] or when empty
};

/// Energy parameters (beta_i, gamma_i), i = 0..r.
struct GibbsParams {
    std::vector<double> beta;
    std::vector<double> gamma;

    int r() const { return static_cast<int>(beta.size()) - 1; }
    void validate() const; // equal nonzero lengths
};

/// Exponent vector alpha with p_i = n^{-alpha_i}; entries >= 0.
struct ExponentVector {
    std::vector<Rational> alpha;

    int r() const { return static_cast<int>(alpha.size()) - 1; }
    const Rational& at(int i) const { return alpha[static_cast<std::size_t>(i)]; }
    void validate() const; // nonempty, entrywise >= 0

    /// p_i = n^{-alpha_i}, evaluated in double and stored exactly as the
    /// resulting dyadic rational.
    ProbVector to_probs(long long n) const;
};

} // namespace rsc
