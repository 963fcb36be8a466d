#pragma once

#include "rsc/complex.hpp"
#include "rsc/geometry2d.hpp"
#include "rsc/params.hpp"
#include "rsc/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rsc {

/// Density invariants of a nonempty complex, held in inverse form
/// nu_i = f_i/f_0 (so mu_i = infinity is simply nu_i = 0). mu_0 = 1 always.
struct DensityProfile {
    std::vector<Rational> nu; // nu[i-1] = nu_i, i = 1..r

    int r() const { return static_cast<int>(nu.size()); }
    const Rational& nu_i(int i) const { return nu[static_cast<std::size_t>(i) - 1]; }
    bool mu_finite(int i) const { return i == 0 || nu_i(i) > 0; }
    /// mu_i = f_0/f_i; throws DomainError when infinite.
    Rational mu_i(int i) const;
    /// "num/den" or "inf", i = 0..r.
    std::string mu_str(int i) const;
};

/// nu_i = f_i(S)/f_0(S) for i = 1..r. S must be nonempty, r >= dim S.
DensityProfile density_profile(const Complex& s, int r);

/// (mu_1, mu_2) of a 2-dimensional complex from the Euler characteristic and
/// the edge-degree deficiency L = sum_e (2 - deg e):
///   mu_1 = 1/3 + (chi + L/3)/e,  mu_2 = 1/2 + (chi + L/2)/f.
std::pair<Rational, Rational> mu_from_l_formula(const Complex& s);

/// Average degrees d_i = (i+2) f_{i+1}/f_i for i = 0..dim-1.
std::vector<Rational> average_degrees(const Complex& s);

/// Density profile via mu_i = (i+1)! / (d_0 d_1 ... d_{i-1}).
DensityProfile mu_from_average_degrees(const Complex& s, int r);

/// One halfspace {alpha in R^r_{>=0} : sum_i nu_i alpha_i < 1}, labelled by
/// the inducing vertex subset.
struct DomainConstraint {
    std::vector<Vertex> witness;
    std::vector<Rational> nu; // length r, index i-1 <-> alpha_i
};

/// Intersection of the constraints, in the reduced coordinates
/// (alpha_1..alpha_r).
struct DensityDomain {
    int r = 0;
    bool reduced = false;
    std::vector<DomainConstraint> constraints;
};

/// Default cap on |V(S)| for the 2^|V| subset enumerations; overridable via
/// the RSC_VERTEX_CAP environment variable.
int vertex_cap_from_env();

/// One constraint per nonempty induced subcomplex; when prune is set,
/// entrywise-dominated and all-zero constraints are removed (ties keep the
/// lexicographically smallest witness).
DensityDomain density_domain(const Complex& s, int r, bool prune,
                             std::optional<int> vertex_cap = std::nullopt);

inline DensityDomain reduced_density_domain(const Complex& s, int r,
                                            std::optional<int> vertex_cap = std::nullopt) {
    return density_domain(s, r, /*prune=*/true, vertex_cap);
}

enum class Membership { inside, boundary, outside };

/// Exact verdict for a nonnegative rational point of length r.
Membership domain_membership(const DensityDomain& d, std::span<const Rational> alpha_reduced);
/// Float verdict; |value - 1| <= eps counts as on the boundary.
Membership domain_membership(const DensityDomain& d, std::span<const double> alpha_reduced,
                             double eps = 1e-9);

/// Closure polygon of a bounded 2-dimensional domain, CCW, starting at the
/// origin, exact rational vertices (axis intercepts included). Throws
/// DomainError when r != 2 or the domain is unbounded.
Polygon2 polygon_2d(const DensityDomain& d);

struct BalanceReport {
    bool balanced = true;
    bool strictly_balanced = true;
    /// First vertex subset (in subset-mask order) violating balance, if any.
    std::vector<Vertex> witness;
    /// First proper subset inducing an equally dense subcomplex, if any.
    std::vector<Vertex> strict_witness;
};

/// Balance verdicts via induced subcomplexes: balanced iff nu(S_W) <= nu(S)
/// entrywise for every nonempty W; strictly balanced iff additionally every
/// proper nonempty W has some i with nu_i(S_W) < nu_i(S).
BalanceReport balance_report(const Complex& s, int r,
                             std::optional<int> vertex_cap = std::nullopt);

bool is_balanced(const Complex& s, int r);
bool is_strictly_balanced(const Complex& s, int r);

/// alpha' = (0, alpha_1/(1-alpha_0), ..., alpha_r/(1-alpha_0)).
/// Throws DomainError for the degenerate regime alpha_0 >= 1.
ExponentVector normalize_alpha(const ExponentVector& alpha);

} // namespace rsc
