#include "rsc/density.hpp"

#include "rsc/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>

namespace rsc {

Rational DensityProfile::mu_i(int i) const {
    if (i == 0) return Rational(1);
    if (!mu_finite(i)) throw DomainError("mu_" + std::to_string(i) + " is infinite");
    return Rational(1) / nu_i(i);
}

std::string DensityProfile::mu_str(int i) const {
    if (!mu_finite(i)) return "inf";
    return rat_str(mu_i(i));
}

DensityProfile density_profile(const Complex& s, int r) {
    if (s.is_empty()) throw DomainError("density_profile: empty complex");
    if (r < s.dim()) throw DomainError("density_profile: r below dim S");
    const Rational f0(static_cast<long>(s.face_count(0)));
    DensityProfile dp;
    for (int i = 1; i <= r; ++i)
        dp.nu.push_back(Rational(static_cast<long>(s.face_count(i))) / f0);
    return dp;
}

std::pair<Rational, Rational> mu_from_l_formula(const Complex& s) {
    if (s.dim() != 2) throw DomainError("mu_from_l_formula: requires a 2-dimensional complex");
    const Rational chi(static_cast<long>(euler_characteristic(s)));
    const Rational l(static_cast<long>(l_value(s)));
    const Rational e(static_cast<long>(s.face_count(1)));
    const Rational f(static_cast<long>(s.face_count(2)));
    Rational mu1 = Rational(1, 3) + (chi + l / 3) / e;
    Rational mu2 = Rational(1, 2) + (chi + l / 2) / f;
    return {mu1, mu2};
}

std::vector<Rational> average_degrees(const Complex& s) {
    if (s.is_empty()) throw DomainError("average_degrees: empty complex");
    std::vector<Rational> d;
    for (int i = 0; i < s.dim(); ++i) {
        if (s.face_count(i) == 0) throw DomainError("average_degrees: zero face count");
        d.push_back(Rational(static_cast<long>((i + 2) * s.face_count(i + 1))) /
                    Rational(static_cast<long>(s.face_count(i))));
    }
    return d;
}

DensityProfile mu_from_average_degrees(const Complex& s, int r) {
    if (s.is_empty()) throw DomainError("mu_from_average_degrees: empty complex");
    if (r < s.dim()) throw DomainError("mu_from_average_degrees: r below dim S");
    const std::vector<Rational> d = average_degrees(s);
    DensityProfile dp;
    Rational prod(1);
    mpz_class fact(1);
    for (int i = 1; i <= r; ++i) {
        if (i - 1 < static_cast<int>(d.size()))
            prod *= d[static_cast<std::size_t>(i) - 1];
        else
            prod = 0; // no faces above dim S
        mpz_mul_ui(fact.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(i + 1));
        dp.nu.push_back(prod / Rational(fact));
    }
    return dp;
}

int vertex_cap_from_env() {
    if (const char* s = std::getenv("RSC_VERTEX_CAP")) return std::atoi(s);
    return 22;
}

namespace {

struct SubsetScan {
    const Complex& s;
    int r;
    std::size_t k;                                  // vertex count
    std::vector<std::vector<std::uint64_t>> masks;  // face bitmasks per dim 1..dim

    SubsetScan(const Complex& s_, int r_, std::optional<int> cap_opt) : s(s_), r(r_) {
        if (s.is_empty()) throw DomainError("subset scan: empty complex");
        if (r < s.dim()) throw DomainError("subset scan: r below dim S");
        const int cap = std::min(cap_opt.value_or(vertex_cap_from_env()), 62);
        k = s.vertex_count();
        if (static_cast<int>(k) > cap)
            throw ResourceError("complex has " + std::to_string(k) +
                                " vertices, above the 2^|V| enumeration cap " +
                                std::to_string(cap));
        masks.resize(static_cast<std::size_t>(s.dim()) + 1);
        for (int d = 1; d <= s.dim(); ++d) {
            const FaceSet& fs = s.faces(d);
            for (std::size_t idx = 0; idx < fs.size(); ++idx) {
                std::uint64_t m = 0;
                for (Vertex v : fs[idx])
                    m |= 1ull << static_cast<unsigned>(s.vertex_index(v));
                masks[static_cast<std::size_t>(d)].push_back(m);
            }
        }
    }

    /// Face counts (f_1..f_r) of the subcomplex induced on the subset mask.
    std::vector<long long> induced_counts(std::uint64_t w) const {
        std::vector<long long> f(static_cast<std::size_t>(r), 0);
        for (int d = 1; d <= s.dim(); ++d) {
            long long c = 0;
            for (std::uint64_t m : masks[static_cast<std::size_t>(d)])
                if ((m & ~w) == 0) ++c;
            f[static_cast<std::size_t>(d) - 1] = c;
        }
        return f;
    }

    std::vector<Vertex> subset_vertices(std::uint64_t w) const {
        std::vector<Vertex> out;
        auto vs = s.vertices();
        for (std::size_t i = 0; i < k; ++i)
            if (w & (1ull << i)) out.push_back(vs[i]);
        return out;
    }
};

} // namespace

DensityDomain density_domain(const Complex& s, int r, bool prune,
                             std::optional<int> vertex_cap) {
    SubsetScan scan(s, r, vertex_cap);
    DensityDomain dom;
    dom.r = r;
    dom.reduced = prune;

    if (!prune) {
        for (std::uint64_t w = 1; w < (1ull << scan.k); ++w) {
            auto f = scan.induced_counts(w);
            const long long size = std::popcount(w);
            DomainConstraint c;
            c.witness = scan.subset_vertices(w);
            for (int i = 1; i <= r; ++i)
                c.nu.push_back(Rational(static_cast<long>(f[static_cast<std::size_t>(i) - 1])) /
                               Rational(static_cast<long>(size)));
            dom.constraints.push_back(std::move(c));
        }
        return dom;
    }

    // Deduplicate by coefficient vector, keeping the lex-smallest witness.
    std::map<std::vector<Rational>, std::vector<Vertex>> by_coeffs;
    for (std::uint64_t w = 1; w < (1ull << scan.k); ++w) {
        auto f = scan.induced_counts(w);
        const long long size = std::popcount(w);
        std::vector<Rational> nu;
        bool all_zero = true;
        for (int i = 1; i <= r; ++i) {
            nu.push_back(Rational(static_cast<long>(f[static_cast<std::size_t>(i) - 1])) /
                         Rational(static_cast<long>(size)));
            if (nu.back() != 0) all_zero = false;
        }
        if (all_zero) continue; // cuts nothing
        auto witness = scan.subset_vertices(w);
        auto [it, inserted] = by_coeffs.try_emplace(std::move(nu), witness);
        if (!inserted && witness < it->second) it->second = std::move(witness);
    }
    // Dominance pruning: drop c when some distinct c' >= c entrywise.
    std::vector<DomainConstraint> kept;
    for (auto& [nu, witness] : by_coeffs) {
        bool dominated = false;
        for (const auto& [nu2, w2] : by_coeffs) {
            if (&nu2 == &nu || nu2 == nu) continue;
            bool geq = true;
            for (std::size_t i = 0; i < nu.size() && geq; ++i) geq = nu2[i] >= nu[i];
            if (geq) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(DomainConstraint{witness, nu});
    }
    // Deepest cuts first; deterministic output order.
    std::sort(kept.begin(), kept.end(), [](const DomainConstraint& a, const DomainConstraint& b) {
        if (a.nu != b.nu) return a.nu > b.nu;
        return a.witness < b.witness;
    });
    dom.constraints = std::move(kept);
    return dom;
}

Membership domain_membership(const DensityDomain& d, std::span<const Rational> alpha_reduced) {
    if (static_cast<int>(alpha_reduced.size()) != d.r)
        throw DomainError("domain_membership: alpha has length " +
                          std::to_string(alpha_reduced.size()) + ", expected r=" +
                          std::to_string(d.r));
    for (const auto& a : alpha_reduced)
        if (a < 0) throw DomainError("domain_membership: negative alpha entry");
    bool on_boundary = false;
    for (const auto& c : d.constraints) {
        Rational value(0);
        for (std::size_t i = 0; i < c.nu.size(); ++i) value += c.nu[i] * alpha_reduced[i];
        if (value > 1) return Membership::outside;
        if (value == 1) on_boundary = true;
    }
    return on_boundary ? Membership::boundary : Membership::inside;
}

Membership domain_membership(const DensityDomain& d, std::span<const double> alpha_reduced,
                             double eps) {
    if (static_cast<int>(alpha_reduced.size()) != d.r)
        throw DomainError("domain_membership: alpha length mismatch");
    for (double a : alpha_reduced)
        if (a < 0) throw DomainError("domain_membership: negative alpha entry");
    bool on_boundary = false;
    for (const auto& c : d.constraints) {
        double value = 0;
        for (std::size_t i = 0; i < c.nu.size(); ++i)
            value += c.nu[i].get_d() * alpha_reduced[i];
        if (std::abs(value - 1.0) <= eps)
            on_boundary = true;
        else if (value > 1.0)
            return Membership::outside;
    }
    return on_boundary ? Membership::boundary : Membership::inside;
}

Polygon2 polygon_2d(const DensityDomain& d) {
    if (d.r != 2) throw DomainError("polygon_2d: requires r = 2");
    // Finite axis intercepts in both directions, else the domain is unbounded.
    std::optional<Rational> x_max, y_max;
    for (const auto& c : d.constraints) {
        if (c.nu[0] > 0) {
            Rational x = Rational(1) / c.nu[0];
            if (!x_max || x < *x_max) x_max = x;
        }
        if (c.nu[1] > 0) {
            Rational y = Rational(1) / c.nu[1];
            if (!y_max || y < *y_max) y_max = y;
        }
    }
    if (!x_max || !y_max)
        throw DomainError("polygon_2d: domain is unbounded");
    Polygon2 poly = box_polygon(*x_max, *y_max);
    for (const auto& c : d.constraints)
        poly = clip_halfplane(poly, c.nu[0], c.nu[1], Rational(1));
    return canonical_polygon(std::move(poly));
}

BalanceReport balance_report(const Complex& s, int r, std::optional<int> vertex_cap) {
    SubsetScan scan(s, r, vertex_cap);
    const long long v = static_cast<long long>(scan.k);
    std::vector<long long> fs(static_cast<std::size_t>(r), 0);
    for (int i = 1; i <= r; ++i) fs[static_cast<std::size_t>(i) - 1] = s.face_count(i);

    BalanceReport report;
    const std::uint64_t full = (scan.k == 64) ? ~0ull : (1ull << scan.k) - 1;
    for (std::uint64_t w = 1; w <= full; ++w) {
        auto fw = scan.induced_counts(w);
        const long long size = std::popcount(w);
        // nu_i(S_W) <= nu_i(S)  <=>  f_i(W) * v <= f_i(S) * |W|  (integers).
        bool leq_all = true, eq_all = true;
        for (int i = 1; i <= r; ++i) {
            const long long lhs = fw[static_cast<std::size_t>(i) - 1] * v;
            const long long rhs = fs[static_cast<std::size_t>(i) - 1] * size;
            if (lhs > rhs) leq_all = false;
            if (lhs != rhs) eq_all = false;
        }
        if (!leq_all) {
            report.balanced = false;
            report.strictly_balanced = false;
            report.witness = scan.subset_vertices(w);
            return report;
        }
        if (w != full && eq_all && report.strictly_balanced) {
            report.strictly_balanced = false;
            report.strict_witness = scan.subset_vertices(w);
        }
    }
    return report;
}

bool is_balanced(const Complex& s, int r) {
    return balance_report(s, r).balanced;
}

bool is_strictly_balanced(const Complex& s, int r) {
    return balance_report(s, r).strictly_balanced;
}

ExponentVector normalize_alpha(const ExponentVector& alpha) {
    alpha.validate();
    const Rational a0 = alpha.at(0);
    if (a0 >= 1)
        throw DomainError("normalize_alpha: alpha_0 >= 1 (complex empty or a single "
                          "vertex a.a.s.)");
    ExponentVector out;
    out.alpha.push_back(Rational(0));
    const Rational denom = Rational(1) - a0;
    for (int i = 1; i <= alpha.r(); ++i) out.alpha.push_back(alpha.at(i) / denom);
    return out;
}

} // namespace rsc
