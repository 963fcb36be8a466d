#include "rsc/prediction.hpp"

#include "rsc/errors.hpp"

#include <sstream>

namespace rsc {

const char* to_string(ContainmentValue v) {
    switch (v) {
    case ContainmentValue::contains_aas: return "contains";
    case ContainmentValue::not_contains_aas: return "not_contains";
    case ContainmentValue::indeterminate_boundary: return "boundary";
    }
    return "?";
}

Verdict containment_verdict(const Complex& s, const ExponentVector& alpha) {
    alpha.validate();
    const int r = alpha.r();
    if (s.dim() > r)
        throw DomainError("containment_verdict: dim S = " + std::to_string(s.dim()) +
                          " exceeds r = " + std::to_string(r));
    Verdict v;
    if (s.is_empty()) {
        v.value = ContainmentValue::contains_aas;
        return v;
    }

    // Work in the full exponent space: each induced subset W contributes
    // alpha_0 + sum_i nu_i(S_W) alpha_i < 1. The pure alpha_0 < 1 cut (any
    // single vertex) is kept explicitly since pruning drops zero rows.
    DensityDomain dom = reduced_density_domain(s, r);
    std::vector<Vertex> base_witness{s.vertices()[0]};
    Rational best_value(-1);
    std::vector<Vertex>* best_witness = &base_witness;
    bool any_eq = false, any_gt = false;

    auto consider = [&](const std::vector<Rational>* nu, std::vector<Vertex>& witness) {
        Rational value = alpha.at(0);
        if (nu)
            for (int i = 1; i <= r; ++i)
                value += (*nu)[static_cast<std::size_t>(i) - 1] * alpha.at(i);
        if (value == 1) any_eq = true;
        if (value > 1) any_gt = true;
        if (value > best_value) {
            best_value = value;
            best_witness = &witness;
        }
    };
    consider(nullptr, base_witness);
    for (auto& c : dom.constraints) consider(&c.nu, c.witness);

    v.binding = *best_witness;
    v.binding_value = best_value;
    if (any_gt)
        v.value = ContainmentValue::not_contains_aas;
    else if (any_eq)
        v.value = ContainmentValue::indeterminate_boundary;
    else
        v.value = ContainmentValue::contains_aas;

    DensityProfile dp = density_profile(s, r);
    Rational density_sum = alpha.at(0);
    for (int i = 1; i <= r; ++i) density_sum += alpha.at(i) * dp.nu_i(i);
    v.exponent = static_cast<double>(s.face_count(0)) * (1.0 - density_sum.get_d());
    return v;
}

Rational dimension_functional(const ExponentVector& alpha, int s) {
    alpha.validate();
    if (s < 0 || s > alpha.r())
        throw DomainError("dimension_functional: s out of range 0..r");
    Rational d(0);
    for (int i = 0; i <= s && i <= alpha.r(); ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s + 1),
                     static_cast<unsigned long>(i + 1));
        Rational coeff(binom, mpz_class(s + 1));
        coeff.canonicalize();
        d += coeff * alpha.at(i);
    }
    return d;
}

DimensionPrediction predict_dimension(const ExponentVector& alpha) {
    alpha.validate();
    const int r = alpha.r();
    DimensionPrediction out;
    std::vector<Rational> d;
    for (int s = 0; s <= r; ++s) {
        d.push_back(dimension_functional(alpha, s));
        if (d.back() < 1)
            out.per_s.push_back(DimensionPrediction::SVerdict::at_least);
        else if (d.back() > 1)
            out.per_s.push_back(DimensionPrediction::SVerdict::less_than);
        else
            out.per_s.push_back(DimensionPrediction::SVerdict::indeterminate);
    }
    out.lower = -1;
    for (int s = 0; s <= r; ++s)
        if (d[static_cast<std::size_t>(s)] < 1) out.lower = s;
    if (out.lower == -1) {
        out.degenerate = true; // alpha_0 >= 1
        out.boundary = (d[0] == 1);
        return out;
    }
    if (out.lower == r) {
        out.exact = true; // dim <= r holds always
    } else {
        const Rational& next = d[static_cast<std::size_t>(out.lower) + 1];
        out.exact = next > 1;
        out.boundary = next == 1;
    }
    return out;
}

std::string DimensionPrediction::str() const {
    std::ostringstream os;
    if (degenerate) {
        os << "degenerate (alpha_0 >= 1): empty or a single vertex a.a.s.";
        if (boundary) os << " [boundary]";
        return os.str();
    }
    if (exact)
        os << "dim = " << lower << " a.a.s.";
    else
        os << "dim >= " << lower << " a.a.s.";
    if (boundary) os << " [boundary at s = " << lower + 1 << "]";
    return os.str();
}

std::vector<DimensionRegion> dimension_regions_2d(int s_max, const Rational& clip) {
    if (s_max < 1) throw DomainError("dimension_regions_2d: s_max must be >= 1");
    if (clip <= 0) throw DomainError("dimension_regions_2d: clip must be positive");
    auto slice_coeffs = [](int s) {
        // D_s restricted to (alpha_1, alpha_2): (s/2, s(s-1)/6).
        return std::array<Rational, 2>{make_rat(s, 2), make_rat(s * (s - 1), 6)};
    };
    std::vector<DimensionRegion> regions;
    for (int s = 1; s <= s_max; ++s) {
        DimensionRegion reg;
        reg.s = s;
        reg.below = slice_coeffs(s);
        reg.above = slice_coeffs(s + 1);
        reg.bounded = reg.below[0] > 0 && reg.below[1] > 0;
        Polygon2 poly = box_polygon(clip, clip);
        poly = clip_halfplane(poly, reg.below[0], reg.below[1], Rational(1), true);
        poly = clip_halfplane(poly, reg.above[0], reg.above[1], Rational(1), false);
        reg.polygon = canonical_polygon(std::move(poly));
        regions.push_back(std::move(reg));
    }
    return regions;
}

} // namespace rsc
