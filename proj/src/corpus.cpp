#include "rsc/corpus.hpp"

#include "rsc/errors.hpp"

#include <cstdlib>

namespace rsc {
namespace corpus {

Complex simplex(int s) {
    if (s < 0) throw DomainError("simplex: s must be >= 0");
    if (s > 20) throw ResourceError("simplex: s too large");
    Face all;
    for (Vertex v = 1; v <= s + 1; ++v) all.push_back(v);
    return Complex::from_facets({all});
}

Complex boundary_simplex(int s) {
    if (s < 1) throw DomainError("boundary_simplex: s must be >= 1");
    if (s > 20) throw ResourceError("boundary_simplex: s too large");
    std::vector<Face> facets;
    for (Vertex skip = 1; skip <= s + 1; ++skip) {
        Face f;
        for (Vertex v = 1; v <= s + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return Complex::from_facets(facets);
}

Complex s_t(int t) {
    if (t < 3) throw DomainError("s_t: t must be >= 3");
    std::vector<Face> facets;
    for (Vertex i = 1; i <= t; ++i)
        for (Vertex j = i + 1; j <= t; ++j)
            for (Vertex k = j + 1; k <= t; ++k) facets.push_back({i, j, k});
    // Edges through the last vertex complete the 1-skeleton to K_{t+1}.
    for (Vertex i = 1; i <= t; ++i) facets.push_back({i, static_cast<Vertex>(t + 1)});
    return Complex::from_facets(facets);
}

Complex torus7() {
    // Triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7; every edge of K_7
    // ends up with degree 2.
    std::vector<Face> facets;
    auto wrap = [](int x) { return static_cast<Vertex>((x - 1) % 7 + 1); };
    for (int i = 1; i <= 7; ++i) {
        facets.push_back({wrap(i), wrap(i + 1), wrap(i + 3)});
        facets.push_back({wrap(i), wrap(i + 2), wrap(i + 3)});
    }
    return Complex::from_facets(facets);
}

Complex rp2_6() {
    return Complex::from_facets({{1, 2, 3},
                                 {1, 2, 4},
                                 {1, 3, 5},
                                 {1, 4, 6},
                                 {1, 5, 6},
                                 {2, 3, 6},
                                 {2, 4, 5},
                                 {2, 5, 6},
                                 {3, 4, 5},
                                 {3, 4, 6}});
}

Complex rp2_disc() {
    std::vector<Face> facets{{1, 2, 7}, {2, 3, 7}, {3, 4, 7}, {4, 6, 7}, {1, 6, 7}};
    for (const Face& f : rp2_6().facets()) facets.push_back(f);
    return Complex::from_facets(facets);
}

Complex unbalanced_disc() {
    // Hexagon boundary 1..6, inner square 7..10 (all internal), triangulated
    // annulus between them, plus one ear triangle {1,2,11} so that the
    // induced subcomplex on {1..10} is a proper subdisc holding every
    // internal vertex.
    return Complex::from_facets({{1, 2, 7},
                                 {2, 7, 8},
                                 {2, 3, 8},
                                 {3, 8, 9},
                                 {3, 4, 9},
                                 {4, 5, 9},
                                 {5, 9, 10},
                                 {5, 6, 10},
                                 {1, 6, 10},
                                 {1, 7, 10},
                                 {7, 8, 9},
                                 {7, 9, 10},
                                 {1, 2, 11}});
}

Complex by_name(const std::string& name) {
    auto parse_suffix = [&](const std::string& prefix) -> int {
        std::string num = name.substr(prefix.size());
        if (num.empty()) throw DomainError("corpus: missing number in '" + name + "'");
        return std::atoi(num.c_str());
    };
    if (name.rfind("simplex:", 0) == 0) return simplex(parse_suffix("simplex:"));
    if (name.rfind("boundary:", 0) == 0) return boundary_simplex(parse_suffix("boundary:"));
    if (name.rfind("st:", 0) == 0) return s_t(parse_suffix("st:"));
    if (name == "torus7") return torus7();
    if (name == "rp2-6") return rp2_6();
    if (name == "rp2-disc") return rp2_disc();
    if (name == "disc-unbalanced") return unbalanced_disc();
    throw DomainError("corpus: unknown complex '" + name + "'");
}

std::vector<std::pair<std::string, Complex>> bundled() {
    return {{"boundary:3", boundary_simplex(3)}, {"rp2-6", rp2_6()},
            {"torus7", torus7()},                {"st:3", s_t(3)},
            {"st:4", s_t(4)},                    {"rp2-disc", rp2_disc()},
            {"disc-unbalanced", unbalanced_disc()}};
}

} // namespace corpus
} // namespace rsc
