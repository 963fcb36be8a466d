#pragma once

#include "rsc/complex.hpp"
#include "rsc/density.hpp"
#include "rsc/params.hpp"

#include <array>
#include <string>
#include <vector>

namespace rsc {

enum class ContainmentValue { contains_aas, not_contains_aas, indeterminate_boundary };

const char* to_string(ContainmentValue v);

struct Verdict {
    ContainmentValue value = ContainmentValue::indeterminate_boundary;
    /// First-moment growth exponent f_0(S) * (1 - sum_i alpha_i / mu_i(S)).
    double exponent = 0.0;
    /// Witness subset of the binding constraint (the violated one when
    /// outside, otherwise the tightest).
    std::vector<Vertex> binding;
    /// Value of the binding constraint at alpha (inside iff < 1).
    Rational binding_value = 0;
};

/// A.a.s. containment of S in Y_r(n, n^-alpha) from alpha alone: membership
/// of alpha in the closed cone over the reduced density domain of S. Points
/// on the boundary are indeterminate.
Verdict containment_verdict(const Complex& s, const ExponentVector& alpha);

/// D_s(alpha) = sum_i C(s+1, i+1)/(s+1) * alpha_i, exact.
Rational dimension_functional(const ExponentVector& alpha, int s);

struct DimensionPrediction {
    enum class SVerdict { at_least, less_than, indeterminate };
    std::vector<SVerdict> per_s; // s = 0..r
    int lower = -1;              // largest s with D_s < 1; -1 when none
    bool exact = false;          // D_{lower+1} > 1, or lower == r
    bool degenerate = false;     // alpha_0 >= 1: empty or one vertex a.a.s.
    bool boundary = false;       // the deciding functional equals 1 exactly

    std::string str() const;
};

/// Largest s with D_s(alpha) < 1 plus the per-s verdicts of the dichotomy.
DimensionPrediction predict_dimension(const ExponentVector& alpha);

/// The (alpha_1, alpha_2)-plane region where dim Y = s a.a.s.
/// (alpha_0 = alpha_3 = ... = 0 slice): D_s < 1 < D_{s+1}.
struct DimensionRegion {
    int s = 0;
    std::array<Rational, 2> below; // D_s coefficients; region below this line
    std::array<Rational, 2> above; // D_{s+1} coefficients; region above it
    bool bounded = false;
    Polygon2 polygon; // intersected with [0, clip]^2 when unbounded
};

std::vector<DimensionRegion> dimension_regions_2d(int s_max = 4,
                                                  const Rational& clip = Rational(4));

} // namespace rsc
