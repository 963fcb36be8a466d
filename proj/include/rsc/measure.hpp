#pragma once

#include "rsc/complex.hpp"
#include "rsc/params.hpp"
#include "rsc/rational.hpp"

#include <functional>
#include <vector>

namespace rsc {

/// Brute-force enumeration caps, overridable via RSC_MAX_BRUTE_N /
/// RSC_MAX_BRUTE_R environment variables.
struct BruteForceCaps {
    long long max_n = 5;
    int max_r = 2;

    static BruteForceCaps from_env();
    void check(const AmbientContext& ctx) const; // throws ResourceError
};

/// Exact probability of drawing exactly Y in Delta_n^(r):
///     prod_i p_i^{f_i(Y)} * q_i^{e_i(Y)}
/// with the 0^0 = 1 convention.
Rational probability(const Complex& y, const AmbientContext& ctx, const ProbVector& p);

/// Natural log of the probability for large instances; -inf when it is 0.
double log_probability(const Complex& y, const AmbientContext& ctx, const ProbVector& p);

/// Verifies the two-sided condition: A <= B inside the context, and the
/// boundary of every external face of B of dimension <= r lies in A.
/// Throws PreconditionError naming a witness external face.
void check_sandwich_precondition(const Complex& a, const Complex& b,
                                 const AmbientContext& ctx);

/// P(A <= Y <= B) = prod_i p_i^{f_i(A)} * q_i^{e_i(B)} under the condition
/// checked by check_sandwich_precondition.
Rational sandwich_probability(const Complex& a, const Complex& b, const AmbientContext& ctx,
                              const ProbVector& p);

/// Visits every complex Y with A <= Y <= B, built level by level (faces are
/// eligible once their whole boundary was chosen). No cap; callers control
/// the size of the gap.
void for_each_sandwich(const Complex& a, const Complex& b,
                       const std::function<void(const Complex&)>& fn);

/// Visits every subcomplex of Delta_n^(r).
void for_each_subcomplex(const AmbientContext& ctx,
                         const std::function<void(const Complex&)>& fn);

/// All subcomplexes of Delta_n^(r), sorted by ascending total face count then
/// lexicographic canonical key.
std::vector<Complex> all_subcomplexes(const AmbientContext& ctx);

/// Sum of probability(Y) over all subcomplexes; equals 1 in exact arithmetic.
/// Enforces the brute-force caps.
Rational partition_sum(const AmbientContext& ctx, const ProbVector& p,
                       const BruteForceCaps& caps = BruteForceCaps::from_env());

/// First moment of the number of copies of S:
///     C(n, f_0(S)) * f_0(S)! * prod_i p_i^{f_i(S)}
double expected_copies(const Complex& s, const AmbientContext& ctx, const ProbVector& p);
double log_expected_copies(const Complex& s, const AmbientContext& ctx, const ProbVector& p);

/// Conversions between the constrained Gibbs parameters and p. gibbs_to_p
/// requires |e^{beta_i} + e^{gamma_i} - 1| <= 1e-12 for every i.
ProbVector gibbs_to_p(const GibbsParams& g);
GibbsParams p_to_gibbs(const ProbVector& p); // requires 0 < p_i < 1

/// Energy H(Y) = sum_i beta_i f_i(Y) + gamma_i e_i(Y).
double gibbs_energy(const Complex& y, const AmbientContext& ctx, const GibbsParams& g);

/// Partition sum Z = sum_Y e^{H(Y)} by brute force over all subcomplexes.
double gibbs_partition(const AmbientContext& ctx, const GibbsParams& g,
                       const BruteForceCaps& caps = BruteForceCaps::from_env());

} // namespace rsc
