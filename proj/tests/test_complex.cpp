#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rsc/complex.hpp"
#include "rsc/corpus.hpp"
#include "rsc/errors.hpp"
#include "rsc/sampler.hpp"

#include <set>

using namespace rsc;

namespace {

Complex triangle() { return corpus::simplex(2); }

FaceVector fv(std::vector<long long> v) { return FaceVector{std::move(v)}; }

// Random small complex for property tests; deterministic via the sampler.
Complex random_complex(std::uint64_t trial, long long n = 6, double p = 0.55) {
    SamplerConfig cfg{AmbientContext{n, 2},
                      ProbVector::of({Rational(1), Rational(p), Rational(p)}), 99};
    return sample_trial(cfg, trial);
}

} // namespace

TEST_CASE("from_facets closes downward") {
    CHECK(triangle().f_vector(2) == fv({3, 3, 1}));
    CHECK(Complex::from_facets({{1}, {2}}).f_vector(1) == fv({2, 0}));

    // Boundary of the 3-simplex, cross-checked against the fixpoint closure.
    Complex bd3 = corpus::boundary_simplex(3);
    CHECK(bd3.f_vector(2) == fv({4, 6, 4}));
    auto faces = oracle::closure({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    long long by_dim[3] = {0, 0, 0};
    for (const auto& f : faces) ++by_dim[f.size() - 1];
    CHECK(by_dim[0] == 4);
    CHECK(by_dim[1] == 6);
    CHECK(by_dim[2] == 4);
    for (const auto& f : faces) CHECK(bd3.has_face(f));

    CHECK_THROWS_AS(Complex::from_facets({{1, 1, 2}}), MalformedInputError);
    CHECK_THROWS_AS(Complex::from_facets({{}}), MalformedInputError);
    CHECK_THROWS_AS(Complex::from_facets({{-1, 2}}), MalformedInputError);
}

TEST_CASE("constructor rejects closure violations") {
    CHECK_THROWS_AS(Complex::from_faces_by_dim({{{1}, {2}}, {{1, 3}}}), MalformedInputError);
    CHECK_THROWS_AS(Complex::from_faces_by_dim({{{1}}, {}, {{1, 2, 3}}}), MalformedInputError);
    CHECK_NOTHROW(Complex::from_faces_by_dim({{{1}, {2}}, {{1, 2}}}));
}

TEST_CASE("f_vector pads and validates") {
    CHECK(Complex().f_vector(1) == fv({0, 0}));
    CHECK(triangle().f_vector(4) == fv({3, 3, 1, 0, 0}));
    CHECK_THROWS_AS(triangle().f_vector(1), DomainError);
    CHECK(Complex().dim() == -1);
}

TEST_CASE("external faces") {
    Complex cycle3 = corpus::boundary_simplex(2);
    CHECK(external_faces(cycle3, {3, 2}) == fv({0, 0, 1}));

    Complex edge = Complex::from_facets({{1, 2}});
    CHECK(external_faces(edge, {4, 2}) == fv({2, 0, 0}));

    CHECK(external_faces(Complex(), {5, 1}) == fv({5, 0}));

    CHECK_THROWS_AS(external_faces(triangle(), AmbientContext{2, 2}), ContextError);
    CHECK_THROWS_AS(external_faces(triangle(), AmbientContext{3, 1}), ContextError);
}

TEST_CASE("external faces match full enumeration on random complexes") {
    const AmbientContext ctx{6, 2};
    for (std::uint64_t t = 0; t < 25; ++t) {
        Complex y = random_complex(t);
        FaceVector e = external_faces(y, ctx);
        auto expected = oracle::external_counts(y, ctx.n, ctx.r);
        REQUIRE(e.counts == expected);
        // e_0 + f_0 = n and f_i + e_i <= C(n, i+1).
        CHECK(e[0] + y.face_count(0) == ctx.n);
        CHECK(y.face_count(1) + e[1] <= 15);
        CHECK(y.face_count(2) + e[2] <= 20);
    }
}

TEST_CASE("induced subcomplexes") {
    Complex s4 = corpus::s_t(4);
    REQUIRE(s4.f_vector(2) == fv({5, 10, 4}));
    Face w{1, 2, 3, 4};
    CHECK(induced_subcomplex(s4, w).f_vector(2) == fv({4, 6, 4}));

    Complex tri = triangle();
    auto verts = tri.vertices();
    CHECK(induced_subcomplex(tri, verts) == tri);
    CHECK(induced_subcomplex(tri, Face{1, 2}).f_vector(2) == fv({2, 1, 0}));
    CHECK_THROWS_AS(induced_subcomplex(tri, Face{1, 7}), DomainError);

    // Monotone: W inside W' gives nested induced subcomplexes.
    for (std::uint64_t t = 0; t < 10; ++t) {
        Complex y = random_complex(t);
        if (y.vertex_count() < 3) continue;
        auto vs = y.vertices();
        Face w1(vs.begin(), vs.begin() + 2);
        Face w2(vs.begin(), vs.begin() + 3);
        CHECK(induced_subcomplex(y, w2).contains_complex(induced_subcomplex(y, w1)));
    }
}

TEST_CASE("skeleton") {
    CHECK(skeleton(triangle(), 1).f_vector(1) == fv({3, 3}));
    CHECK(skeleton(triangle(), 2) == triangle());
    CHECK(skeleton(triangle(), 5) == triangle());
    CHECK(skeleton(corpus::boundary_simplex(3), 0).f_vector(0) == fv({4}));
    CHECK(skeleton(triangle(), -1).is_empty());
    CHECK_THROWS_AS(skeleton(triangle(), -2), DomainError);
}

TEST_CASE("degree and L") {
    CHECK(l_value(corpus::torus7()) == 0);
    CHECK(l_value(corpus::rp2_6()) == 0);
    CHECK(l_value(triangle()) == 3);

    Complex z = corpus::rp2_disc();
    CHECK(l_value(z) == -5);
    CHECK(euler_characteristic(z) == 2);

    CHECK(degree(triangle(), Face{1, 2}) == 1);
    CHECK(degree(triangle(), Face{1}) == 2);
    CHECK(degree(triangle(), Face{1, 2, 3}) == 0);
    CHECK_THROWS_AS(degree(triangle(), Face{1, 4}), DomainError);

    // For any 2-complex, L = 2 f_1 - 3 f_2.
    for (std::uint64_t t = 0; t < 20; ++t) {
        Complex y = random_complex(t);
        if (y.dim() < 1) continue;
        CHECK(l_value(y) == 2 * y.face_count(1) - 3 * y.face_count(2));
    }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(corpus::boundary_simplex(3)) == 2);
    CHECK(euler_characteristic(Complex::from_facets({{1}})) == 1);
    CHECK(euler_characteristic(corpus::torus7()) == 0);
    CHECK(euler_characteristic(Complex()) == 0);
}

TEST_CASE("embedding counts") {
    Complex edge = Complex::from_facets({{1, 2}});
    Complex cycle3 = corpus::boundary_simplex(2);
    CHECK(count_embeddings(edge, cycle3) == 6);
    CHECK(count_embeddings(cycle3, cycle3) >= 1);
    CHECK(count_embeddings(triangle(), corpus::boundary_simplex(3)) == 24);
    CHECK(count_embeddings(triangle(), corpus::boundary_simplex(3)) ==
          oracle::count_embeddings(triangle(), corpus::boundary_simplex(3)));
}

TEST_CASE("embedding counts match all-injection enumeration") {
    for (std::uint64_t t = 0; t < 12; ++t) {
        Complex s = random_complex(t, 5, 0.5);
        Complex y = random_complex(t + 100, 7, 0.6);
        CAPTURE(t);
        CHECK(count_embeddings(s, y) == oracle::count_embeddings(s, y));
        CHECK((count_embeddings(s, y) > 0) == contains_copy(s, y));
    }
}

TEST_CASE("contains_copy budget") {
    Complex s = corpus::boundary_simplex(2);
    Complex y = corpus::torus7();
    CHECK(contains_copy_budgeted(s, y, 0) == ContainResult::budget_exhausted);
    CHECK(contains_copy_budgeted(s, y) == ContainResult::found);
    Complex tetra_interior = corpus::simplex(3);
    CHECK(contains_copy_budgeted(tetra_interior, y, -1) == ContainResult::not_found);
    CHECK(contains_copy(Complex(), y));
}

TEST_CASE("canonical keys separate distinct complexes") {
    std::set<std::string> keys;
    keys.insert(Complex().canonical_key());
    keys.insert(triangle().canonical_key());
    keys.insert(corpus::boundary_simplex(2).canonical_key());
    keys.insert(Complex::from_facets({{1}, {2}}).canonical_key());
    keys.insert(Complex::from_facets({{1, 2}}).canonical_key());
    CHECK(keys.size() == 5);
}
