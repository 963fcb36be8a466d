#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsc/corpus.hpp"
#include "rsc/errors.hpp"
#include "rsc/measure.hpp"
#include "rsc/sampler.hpp"

#include <cmath>

using namespace rsc;

namespace {

ProbVector pv(std::vector<std::string> entries) {
    std::vector<Rational> p;
    for (const auto& e : entries) p.push_back(parse_rational(e));
    return ProbVector::of(std::move(p));
}

} // namespace

TEST_CASE("probability closed forms") {
    // Empty complex: (1 - p0)^n.
    CHECK(probability(Complex(), {4, 0}, pv({"1/2"})) == make_rat(1, 16));
    CHECK(probability(Complex(), {3, 1}, pv({"1/3", "9/10"})) == make_rat(8, 27));

    // One vertex, n=2, r=1: p0 * q0 (no pair of vertices, so p1 plays no role).
    Complex point = Complex::from_facets({{1}});
    CHECK(probability(point, {2, 1}, pv({"1/2", "1/2"})) == make_rat(1, 4));

    // The full 2-skeleton at p = 1 carries the whole measure.
    CHECK(probability(corpus::simplex(2), {3, 2}, pv({"1", "1", "1"})) == 1);

    CHECK_THROWS_AS(probability(corpus::simplex(2), {2, 2}, pv({"1", "1", "1"})),
                    ContextError);
}

TEST_CASE("zero-exponent convention at the endpoints") {
    // p0 = 0 with f0 = 0 contributes 1, so P(empty) = q0^n = 1.
    CHECK(probability(Complex(), {3, 0}, pv({"0"})) == 1);
    // p1 = 1 kills complexes with external edges only.
    Complex two_pts = Complex::from_facets({{1}, {2}});
    CHECK(probability(two_pts, {2, 1}, pv({"1", "1"})) == 0);
    Complex edge = Complex::from_facets({{1, 2}});
    CHECK(probability(edge, {2, 1}, pv({"1", "1"})) == 1);
}

TEST_CASE("degeneracy concentrates the measure") {
    const AmbientContext ctx{3, 2};
    // p2 = 0: complexes with a 2-face have probability zero.
    ProbVector p = pv({"1/2", "1/2", "0"});
    // p1 = 1: complexes with an external edge have probability zero.
    ProbVector q = pv({"1/2", "1", "1/2"});
    for_each_subcomplex(ctx, [&](const Complex& y) {
        if (y.face_count(2) > 0) CHECK(probability(y, ctx, p) == 0);
        if (external_faces(y, ctx)[1] > 0) CHECK(probability(y, ctx, q) == 0);
    });
}

TEST_CASE("log probability agrees with the exact value") {
    const AmbientContext ctx{4, 2};
    ProbVector p = pv({"1/3", "1/2", "1/4"});
    Complex y = corpus::simplex(2);
    CHECK(std::abs(log_probability(y, ctx, p) -
                   std::log(probability(y, ctx, p).get_d())) < 1e-12);
    CHECK(std::isinf(log_probability(y, ctx, pv({"0", "1/2", "1/4"}))));
}

TEST_CASE("partition sum is exactly one") {
    CHECK(partition_sum({1, 0}, pv({"3/7"})) == 1);
    CHECK(partition_sum({2, 1}, pv({"2/5", "1/3"})) == 1);
    CHECK(partition_sum({3, 2}, pv({"1/3", "1/2", "1/4"})) == 1);
    CHECK(partition_sum({4, 2}, pv({"9/10", "1/10", "5/8"})) == 1);
    CHECK_THROWS_AS(partition_sum({6, 2}, pv({"1/2", "1/2", "1/2"})), ResourceError);
}

TEST_CASE("subcomplex enumeration is deterministic and complete") {
    auto all = all_subcomplexes({3, 2});
    CHECK(all.size() == 19); // hand count: 1 + 3 + 6 + 9
    for (std::size_t i = 1; i < all.size(); ++i) {
        long long a = all[i - 1].total_face_count(), b = all[i].total_face_count();
        CHECK(a <= b);
        if (a == b) CHECK(all[i - 1].canonical_key() < all[i].canonical_key());
    }
}

TEST_CASE("sandwich probability closed form") {
    const AmbientContext ctx{2, 0};
    Complex a = Complex::from_facets({{1}});
    Complex b = Complex::from_facets({{1}, {2}});
    ProbVector p = pv({"1/2"});
    CHECK(sandwich_probability(a, b, ctx, p) == make_rat(1, 2));

    // Brute-force: sum of the pointwise measure over the two complexes in between.
    Rational direct(0);
    for_each_sandwich(a, b, [&](const Complex& y) { direct += probability(y, ctx, p); });
    CHECK(direct == make_rat(1, 2));

    // A = empty, B = full skeleton: every complex lies in between, total 1.
    const AmbientContext ctx2{3, 2};
    Complex full = corpus::simplex(2);
    ProbVector p2 = pv({"1/3", "1/2", "1/4"});
    CHECK(sandwich_probability(Complex(), full, ctx2, p2) == 1);

    // A = B = Y reproduces the pointwise measure.
    Complex y = corpus::boundary_simplex(2);
    CHECK(sandwich_probability(y, y, ctx2, p2) == probability(y, ctx2, p2));
}

TEST_CASE("sandwich precondition checker") {
    const AmbientContext ctx{3, 2};
    Complex b = corpus::boundary_simplex(2); // 3-cycle; the triangle is external
    Complex a = Complex::from_facets({{1}});
    CHECK_THROWS_AS(check_sandwich_precondition(a, b, ctx), PreconditionError);
    CHECK_THROWS_WITH_AS(check_sandwich_precondition(a, b, ctx),
                         doctest::Contains("external face {1,2,3}"), PreconditionError);
    // A not inside B at all.
    Complex c = Complex::from_facets({{1, 2, 3}});
    CHECK_THROWS_AS(check_sandwich_precondition(c, b, ctx), PreconditionError);
    // Taking A = B always satisfies the condition.
    CHECK_NOTHROW(check_sandwich_precondition(b, b, ctx));
}

TEST_CASE("sandwich equals brute force on random valid pairs") {
    const AmbientContext ctx{5, 2};
    ProbVector p = pv({"2/3", "1/2", "1/5"});
    SamplerConfig scfg{ctx, pv({"3/4", "1/2", "1/2"}), 7};
    int tested = 0;
    for (std::uint64_t t = 0; tested < 8 && t < 40; ++t) {
        Complex b = sample_trial(scfg, t);
        // Smallest valid A: closure of the boundaries of B's external faces.
        std::vector<Face> mandatory;
        FaceVector e = external_faces(b, ctx);
        auto vs = b.vertices();
        for (int i = 1; i <= ctx.r; ++i) {
            if (i - 1 > b.dim()) break;
            const FaceSet& below = b.faces(i - 1);
            for (std::size_t k = 0; k < below.size(); ++k) {
                Face tau(below[k].begin(), below[k].end());
                for (Vertex v : vs) {
                    if (v <= tau.back()) continue;
                    Face sigma = tau;
                    sigma.push_back(v);
                    if (b.has_face(sigma)) continue;
                    bool ext = true;
                    for (std::size_t drop = 0; drop + 1 < sigma.size() && ext; ++drop) {
                        Face sub;
                        for (std::size_t j = 0; j < sigma.size(); ++j)
                            if (j != drop) sub.push_back(sigma[j]);
                        ext = b.has_face(sub);
                    }
                    if (!ext) continue;
                    for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
                        Face sub;
                        for (std::size_t j = 0; j < sigma.size(); ++j)
                            if (j != drop) sub.push_back(sigma[j]);
                        mandatory.push_back(sub);
                    }
                }
            }
        }
        Complex a = Complex::from_facets(mandatory);
        if (!b.contains_complex(a)) continue; // cannot happen; belt and braces
        ++tested;
        Rational direct(0);
        long long count = 0;
        for_each_sandwich(a, b, [&](const Complex& y) {
            direct += probability(y, ctx, p);
            ++count;
        });
        CAPTURE(t);
        CHECK(count >= 1);
        CHECK(sandwich_probability(a, b, ctx, p) == direct);
    }
    CHECK(tested == 8);
}

TEST_CASE("expected copies") {
    Complex edge = Complex::from_facets({{1, 2}});
    CHECK(expected_copies(edge, {3, 1}, pv({"1", "1/2"})) == doctest::Approx(3.0));
    Complex point = Complex::from_facets({{1}});
    CHECK(expected_copies(point, {100, 0}, pv({"1/4"})) == doctest::Approx(25.0));
    Complex big = corpus::simplex(3);
    CHECK(expected_copies(big, {3, 3}, pv({"1/2", "1/2", "1/2", "1/2"})) == 0.0);
}

TEST_CASE("gibbs conversions") {
    const double lhalf = std::log(0.5);
    GibbsParams g{{lhalf, lhalf}, {lhalf, lhalf}};
    ProbVector p = gibbs_to_p(g);
    CHECK(std::abs(p.p_d(0) - 0.5) < 1e-15);
    CHECK(std::abs(p.p_d(1) - 0.5) < 1e-15);

    ProbVector q = pv({"1/4", "3/5"});
    GibbsParams g2 = p_to_gibbs(q);
    ProbVector back = gibbs_to_p(g2);
    CHECK(std::abs(back.p_d(0) - 0.25) < 1e-14);
    CHECK(std::abs(back.p_d(1) - 0.6) < 1e-14);

    GibbsParams bad{{0.0, 0.0}, {0.0, 0.0}}; // e^0 + e^0 = 2
    CHECK_THROWS_AS(gibbs_to_p(bad), DomainError);
    CHECK_THROWS_AS(p_to_gibbs(pv({"1", "1/2"})), DomainError);

    // Constrained parameters make the partition function collapse to 1.
    CHECK(gibbs_partition({2, 1}, g) == doctest::Approx(1.0).epsilon(1e-12));
    GibbsParams g3 = p_to_gibbs(pv({"1/3", "2/3", "1/5"}));
    CHECK(gibbs_partition({3, 2}, g3) == doctest::Approx(1.0).epsilon(1e-12));

    // Under the constraint the Gibbs weight matches the measure pointwise.
    const AmbientContext ctx{3, 2};
    for_each_subcomplex(ctx, [&](const Complex& y) {
        double w = std::exp(gibbs_energy(y, ctx, g3));
        double direct = probability(y, ctx, pv({"1/3", "2/3", "1/5"})).get_d();
        CHECK(w == doctest::Approx(direct).epsilon(1e-10));
    });
}
