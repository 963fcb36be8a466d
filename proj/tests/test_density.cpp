#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rsc/corpus.hpp"
#include "rsc/density.hpp"
#include "rsc/errors.hpp"
#include "rsc/sampler.hpp"

#include <set>

using namespace rsc;

namespace {

Rational rat(const char* s) { return parse_rational(s); }

std::vector<Rational> rats(std::vector<const char*> entries) {
    std::vector<Rational> out;
    for (const char* e : entries) out.push_back(rat(e));
    return out;
}

// Random nonempty 2-complex with at least one 2-face.
Complex random_2complex(std::uint64_t& trial) {
    SamplerConfig cfg{{7, 2}, ProbVector::of(rats({"9/10", "3/5", "3/5"})), 31337};
    for (;; ++trial) {
        Complex y = sample_trial(cfg, trial);
        if (y.dim() == 2) {
            ++trial;
            return y;
        }
    }
}

} // namespace

TEST_CASE("density profiles") {
    // Full s-simplex: mu_i = (s+1) / C(s+1, i+1).
    DensityProfile dp3 = density_profile(corpus::simplex(3), 3);
    CHECK(dp3.mu_i(1) == rat("2/3"));
    CHECK(dp3.mu_i(2) == Rational(1));
    CHECK(dp3.mu_i(3) == Rational(4));

    DensityProfile torus = density_profile(corpus::torus7(), 2);
    CHECK(torus.mu_i(1) == rat("1/3"));
    CHECK(torus.mu_i(2) == rat("1/2"));

    DensityProfile s4 = density_profile(corpus::s_t(4), 2);
    CHECK(s4.mu_i(1) == rat("1/2"));
    CHECK(s4.mu_i(2) == rat("5/4"));

    // Infinite entries stay representable through nu = 0.
    DensityProfile point = density_profile(Complex::from_facets({{1}}), 2);
    CHECK(point.nu_i(1) == 0);
    CHECK_FALSE(point.mu_finite(1));
    CHECK(point.mu_str(1) == "inf");
    CHECK(point.mu_str(0) == "1");
    CHECK_THROWS_AS(point.mu_i(1), DomainError);

    CHECK_THROWS_AS(density_profile(Complex(), 2), DomainError);
    CHECK_THROWS_AS(density_profile(corpus::simplex(2), 1), DomainError);
}

TEST_CASE("chi/L route to the invariants") {
    auto [mu1, mu2] = mu_from_l_formula(corpus::boundary_simplex(3));
    CHECK(mu1 == rat("2/3")); // 1/3 + 2/6
    CHECK(mu2 == Rational(1));

    auto [r1, r2] = mu_from_l_formula(corpus::rp2_6());
    CHECK(r1 == rat("2/5"));
    CHECK(r2 == rat("3/5")); // 1/2 + 1/10

    // Z: mu_1 = 1/3 + 1/(3e), mu_2 = 1/2 - 1/(2f) with e = 20, f = 15.
    Complex z = corpus::rp2_disc();
    auto [z1, z2] = mu_from_l_formula(z);
    CHECK(z1 == Rational(1, 3) + Rational(1) / Rational(3 * 20));
    CHECK(z2 == Rational(1, 2) - Rational(1) / Rational(2 * 15));
    CHECK(z1 == rat("7/20"));
    CHECK(z2 == rat("7/15"));

    CHECK_THROWS_AS(mu_from_l_formula(Complex::from_facets({{1, 2}})), DomainError);
}

TEST_CASE("average degree route") {
    auto d = average_degrees(corpus::boundary_simplex(3));
    CHECK(d == rats({"3", "2"}));
    DensityProfile viaDeg = mu_from_average_degrees(corpus::boundary_simplex(3), 2);
    CHECK(viaDeg.mu_i(2) == Rational(1)); // 3! / (3*2)

    CHECK(average_degrees(corpus::simplex(3)) == rats({"3", "2", "1"}));
    CHECK(average_degrees(corpus::simplex(2)) == rats({"2", "1"}));

    // Beyond dim S the product vanishes, i.e. mu is infinite.
    DensityProfile padded = mu_from_average_degrees(corpus::simplex(1), 2);
    CHECK(padded.nu_i(2) == 0);

    CHECK_THROWS_AS(average_degrees(Complex()), DomainError);
}

TEST_CASE("three-way mu agreement") {
    std::uint64_t trial = 0;
    std::vector<Complex> batch;
    for (int i = 0; i < 50; ++i) batch.push_back(random_2complex(trial));
    for (const auto& [name, c] : corpus::bundled())
        if (c.dim() == 2 && c.face_count(2) > 0) batch.push_back(c);
    for (const Complex& s : batch) {
        DensityProfile direct = density_profile(s, 2);
        DensityProfile viaDeg = mu_from_average_degrees(s, 2);
        REQUIRE(direct.nu == viaDeg.nu);
        if (s.face_count(1) > 0 && s.face_count(2) > 0) {
            auto [mu1, mu2] = mu_from_l_formula(s);
            REQUIRE(mu1 == direct.mu_i(1));
            REQUIRE(mu2 == direct.mu_i(2));
        }
    }
}

TEST_CASE("reduced density domains") {
    DensityDomain tri = reduced_density_domain(corpus::simplex(2), 2);
    REQUIRE(tri.constraints.size() == 1);
    CHECK(tri.constraints[0].nu == rats({"1", "1/3"}));
    CHECK(tri.constraints[0].witness == Face{1, 2, 3});

    DensityDomain s3 = reduced_density_domain(corpus::s_t(3), 2);
    REQUIRE(s3.constraints.size() == 2);
    CHECK(s3.constraints[0].nu == rats({"3/2", "1/4"}));
    CHECK(s3.constraints[0].witness == Face{1, 2, 3, 4});
    CHECK(s3.constraints[1].nu == rats({"1", "1/3"}));
    CHECK(s3.constraints[1].witness == Face{1, 2, 3});

    DensityDomain s4 = reduced_density_domain(corpus::s_t(4), 2);
    REQUIRE(s4.constraints.size() == 2);
    CHECK(s4.constraints[0].nu == rats({"2", "4/5"}));
    CHECK(s4.constraints[0].witness == Face{1, 2, 3, 4, 5});
    CHECK(s4.constraints[1].nu == rats({"3/2", "1"}));
    CHECK(s4.constraints[1].witness == Face{1, 2, 3, 4});

    DensityDomain vertex = reduced_density_domain(Complex::from_facets({{1}}), 2);
    CHECK(vertex.constraints.empty());

    CHECK_THROWS_AS(reduced_density_domain(corpus::torus7(), 2, 3), ResourceError);
}

TEST_CASE("domain membership") {
    DensityDomain s4 = reduced_density_domain(corpus::s_t(4), 2);
    CHECK(domain_membership(s4, rats({"1/4", "5/8"})) == Membership::boundary);
    CHECK(domain_membership(s4, rats({"0", "0"})) == Membership::inside);
    CHECK(domain_membership(s4, rats({"1/4", "1/2"})) == Membership::inside);
    CHECK(domain_membership(s4, rats({"1/2", "5/8"})) == Membership::outside);

    DensityDomain tri = reduced_density_domain(corpus::simplex(2), 2);
    std::vector<double> a{0.9, 1.5};
    CHECK(domain_membership(tri, std::span<const double>(a)) == Membership::outside);
    std::vector<double> b{0.5, 1.5 - 1e-12};
    CHECK(domain_membership(tri, std::span<const double>(b)) == Membership::boundary);

    CHECK_THROWS_AS(domain_membership(s4, rats({"-1", "0"})), DomainError);
    CHECK_THROWS_AS(domain_membership(s4, rats({"0"})), DomainError);
}

TEST_CASE("membership is invariant under pruning") {
    std::vector<Complex> samples{corpus::simplex(2), corpus::s_t(3), corpus::s_t(4),
                                 corpus::boundary_simplex(3)};
    std::vector<const char*> grid{"0", "1/4", "1/3", "1/2", "2/3", "1", "3/2", "2", "3"};
    for (const Complex& s : samples) {
        DensityDomain pruned = reduced_density_domain(s, 2);
        DensityDomain raw = density_domain(s, 2, /*prune=*/false);
        for (const char* x : grid)
            for (const char* y : grid) {
                auto alpha = rats({x, y});
                REQUIRE(domain_membership(pruned, alpha) == domain_membership(raw, alpha));
            }
    }
}

TEST_CASE("induced constraints cut the same polytope as all subcomplexes") {
    std::uint64_t trial = 500;
    std::vector<Complex> samples{corpus::simplex(2), corpus::s_t(3), corpus::s_t(4),
                                 corpus::boundary_simplex(3), corpus::rp2_6()};
    for (int i = 0; i < 6; ++i) {
        SamplerConfig cfg{{6, 2}, ProbVector::of(rats({"9/10", "3/5", "1/2"})), 777};
        Complex y = sample_trial(cfg, trial++);
        if (!y.is_empty()) samples.push_back(y);
    }
    std::vector<const char*> grid{"0", "1/4", "1/3", "1/2", "1", "3/2", "2", "3"};
    for (const Complex& s : samples) {
        CAPTURE(s.canonical_key());
        // Oracle constraint set: every nonempty subcomplex T of S.
        std::set<std::vector<Rational>> oracle_nu;
        oracle::for_each_subcomplex_fvector(s, 2, [&](const std::vector<long long>& f,
                                                      const Face&) {
            oracle_nu.insert({Rational(static_cast<long>(f[1])) / Rational(static_cast<long>(f[0])),
                              Rational(static_cast<long>(f[2])) / Rational(static_cast<long>(f[0]))});
        });
        DensityDomain dom = reduced_density_domain(s, 2);
        for (const char* x : grid)
            for (const char* y : grid) {
                auto alpha = rats({x, y});
                bool any_eq = false, any_gt = false;
                for (const auto& nu : oracle_nu) {
                    Rational v = nu[0] * alpha[0] + nu[1] * alpha[1];
                    if (v == 1) any_eq = true;
                    if (v > 1) any_gt = true;
                }
                Membership expected = any_gt ? Membership::outside
                                     : any_eq ? Membership::boundary
                                              : Membership::inside;
                REQUIRE(domain_membership(dom, alpha) == expected);
            }
    }
}

TEST_CASE("nu is monotone from subcomplex to induced") {
    for (const Complex& s : {corpus::s_t(3), corpus::boundary_simplex(3)}) {
        oracle::for_each_subcomplex_fvector(s, 2, [&](const std::vector<long long>& f,
                                                      const Face& verts) {
            DensityProfile induced = density_profile(induced_subcomplex(s, verts), 2);
            for (int i = 1; i <= 2; ++i) {
                Rational nu_t = Rational(static_cast<long>(f[static_cast<std::size_t>(i)])) /
                                Rational(static_cast<long>(f[0]));
                REQUIRE(nu_t <= induced.nu_i(i));
            }
        });
    }
}

TEST_CASE("polygons of 2d domains") {
    auto tri = polygon_2d(reduced_density_domain(corpus::simplex(2), 2));
    REQUIRE(tri.size() == 3);
    CHECK(tri[0] == Point2{Rational(0), Rational(0)});
    CHECK(tri[1] == Point2{Rational(1), Rational(0)});
    CHECK(tri[2] == Point2{Rational(0), Rational(3)});

    auto s3 = polygon_2d(reduced_density_domain(corpus::s_t(3), 2));
    REQUIRE(s3.size() == 4);
    CHECK(s3[0] == Point2{Rational(0), Rational(0)});
    CHECK(s3[1] == Point2{rat("2/3"), Rational(0)});
    CHECK(s3[2] == Point2{rat("1/3"), Rational(2)});
    CHECK(s3[3] == Point2{Rational(0), Rational(3)});

    auto s4 = polygon_2d(reduced_density_domain(corpus::s_t(4), 2));
    REQUIRE(s4.size() == 4);
    CHECK(s4[2] == Point2{rat("1/4"), rat("5/8")});

    auto torus = polygon_2d(reduced_density_domain(corpus::torus7(), 2));
    REQUIRE(torus.size() == 3);
    CHECK(torus[1] == Point2{rat("1/3"), Rational(0)});
    CHECK(torus[2] == Point2{Rational(0), rat("1/2")});

    CHECK_THROWS_AS(polygon_2d(reduced_density_domain(Complex::from_facets({{1, 2}}), 2)),
                    DomainError);
    CHECK_THROWS_AS(polygon_2d(reduced_density_domain(corpus::simplex(2), 1)), DomainError);
}

TEST_CASE("balancedness of the corpus") {
    for (int s = 1; s <= 3; ++s) {
        CAPTURE(s);
        CHECK(is_strictly_balanced(corpus::boundary_simplex(s + 1), s));
    }
    CHECK(is_balanced(corpus::boundary_simplex(3), 2));
    CHECK(is_balanced(corpus::rp2_6(), 2));
    CHECK(is_balanced(corpus::torus7(), 2));
    // Both surfaces are degree-regular, hence strictly balanced.
    CHECK(is_strictly_balanced(corpus::rp2_6(), 2));
    CHECK(is_strictly_balanced(corpus::torus7(), 2));

    // The full simplex is strictly balanced; its boundary complex too.
    CHECK(is_strictly_balanced(corpus::simplex(2), 2));
    CHECK(is_strictly_balanced(corpus::simplex(3), 3));

    // S_t is unbalanced: the subcomplex on {1..t} is denser in dimension 2.
    BalanceReport st = balance_report(corpus::s_t(3), 2);
    CHECK_FALSE(st.balanced);
    CHECK_FALSE(st.witness.empty());
}

TEST_CASE("unbalanced disc with a verified witness") {
    Complex disc = corpus::unbalanced_disc();
    DensityProfile dp = density_profile(disc, 2);
    // v = 11 vertices, v_i = 4 internal: e = 2v + v_i - 3, f = v + v_i - 2.
    CHECK(dp.mu_i(1) == rat("11/23"));
    CHECK(dp.mu_i(2) == rat("11/13"));

    BalanceReport rep = balance_report(disc, 2);
    CHECK_FALSE(rep.balanced);
    REQUIRE_FALSE(rep.witness.empty());
    // The reported witness genuinely violates balance.
    DensityProfile wp = density_profile(induced_subcomplex(disc, rep.witness), 2);
    CHECK((wp.nu_i(1) > dp.nu_i(1) || wp.nu_i(2) > dp.nu_i(2)));

    // The designed subdisc {1..10} is itself a violating subset.
    DensityProfile sub = density_profile(induced_subcomplex(disc, Face{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 2);
    CHECK(sub.mu_i(1) == rat("10/21"));
    CHECK(sub.mu_i(2) == rat("5/6"));
    CHECK(sub.mu_i(1) < dp.mu_i(1));
    CHECK(sub.mu_i(2) < dp.mu_i(2));
}

TEST_CASE("induced-only balance verdict agrees with the all-subcomplex oracle") {
    std::vector<Complex> small{corpus::simplex(2), corpus::boundary_simplex(2),
                               corpus::boundary_simplex(3), corpus::s_t(3), corpus::s_t(4),
                               corpus::rp2_6()};
    std::uint64_t trial = 90;
    for (int i = 0; i < 5; ++i) {
        SamplerConfig cfg{{6, 2}, ProbVector::of(rats({"4/5", "3/5", "1/2"})), 123};
        Complex y = sample_trial(cfg, trial++);
        if (!y.is_empty()) small.push_back(y);
    }
    for (const Complex& s : small) {
        CAPTURE(s.canonical_key());
        DensityProfile dp = density_profile(s, 2);
        const long long v = s.face_count(0);
        bool oracle_balanced = true, oracle_strict = true;
        oracle::for_each_subcomplex_fvector(s, 2, [&](const std::vector<long long>& f,
                                                      const Face&) {
            bool proper = !(f[0] == v && f[1] == s.face_count(1) && f[2] == s.face_count(2));
            bool leq = true, strict = false;
            for (int i = 1; i <= 2; ++i) {
                // nu_i(T) vs nu_i(S) by cross-multiplication.
                long long lhs = f[static_cast<std::size_t>(i)] * v;
                long long rhs = s.face_count(i) * f[0];
                if (lhs > rhs) leq = false;
                if (lhs < rhs) strict = true;
            }
            if (!leq) oracle_balanced = false;
            if (proper && (!leq || !strict)) oracle_strict = false;
        });
        BalanceReport rep = balance_report(s, 2);
        REQUIRE(rep.balanced == oracle_balanced);
        REQUIRE(rep.strictly_balanced == oracle_strict);
    }
}

TEST_CASE("normalize alpha") {
    ExponentVector a{rats({"1/2", "1/4", "1/10"})};
    ExponentVector n = normalize_alpha(a);
    CHECK(n.alpha == rats({"0", "1/2", "1/5"}));

    ExponentVector zero_first{rats({"0", "3/5", "7/10"})};
    CHECK(normalize_alpha(zero_first).alpha == zero_first.alpha);

    CHECK_THROWS_AS(normalize_alpha(ExponentVector{rats({"1", "1/2"})}), DomainError);
    CHECK_THROWS_AS(normalize_alpha(ExponentVector{rats({"3/2", "1/2"})}), DomainError);
}
