#include "rsc/measure.hpp"

#include "rsc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace rsc {

namespace {

std::string face_str(std::span<const Vertex> f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    os << '}';
    return os.str();
}

void require_matching_r(const AmbientContext& ctx, int params_r, const char* what) {
    if (params_r != ctx.r)
        throw DomainError(std::string(what) + ": parameter length " +
                          std::to_string(params_r + 1) + " does not match r=" +
                          std::to_string(ctx.r));
}

// Full r-skeleton of the simplex on {1..n}.
Complex full_skeleton(long long n, int r) {
    std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(r) + 1);
    std::vector<Face> current;
    for (Vertex v = 1; v <= n; ++v) current.push_back({v});
    by_dim[0] = current;
    for (int d = 1; d <= r; ++d) {
        std::vector<Face> next;
        for (const Face& f : current)
            for (Vertex v = f.back() + 1; v <= n; ++v) {
                Face g = f;
                g.push_back(v);
                next.push_back(std::move(g));
            }
        by_dim[static_cast<std::size_t>(d)] = next;
        current = std::move(next);
    }
    return Complex::from_faces_by_dim(by_dim);
}

// External faces of B up to dimension r, with their boundary faces, fed to fn.
// fn(sigma) returns false to stop early.
void visit_external_faces(const Complex& b, const AmbientContext& ctx,
                          const std::function<bool(const Face&)>& fn) {
    auto vs = b.vertices();
    Face sigma, sub;
    for (int i = 1; i <= ctx.r; ++i) {
        if (i - 1 > b.dim()) break;
        const FaceSet& below = b.faces(i - 1);
        for (std::size_t k = 0; k < below.size(); ++k) {
            auto tau = below[k];
            auto it = std::upper_bound(vs.begin(), vs.end(), tau.back());
            for (; it != vs.end(); ++it) {
                sigma.assign(tau.begin(), tau.end());
                sigma.push_back(*it);
                if (b.has_face(sigma)) continue;
                bool boundary_ok = true;
                for (std::size_t drop = 0; drop + 1 < sigma.size() && boundary_ok; ++drop) {
                    sub.clear();
                    for (std::size_t j = 0; j < sigma.size(); ++j)
                        if (j != drop) sub.push_back(sigma[j]);
                    boundary_ok = below.contains(sub);
                }
                if (boundary_ok && !fn(sigma)) return;
            }
        }
    }
}

} // namespace

BruteForceCaps BruteForceCaps::from_env() {
    BruteForceCaps caps;
    if (const char* s = std::getenv("RSC_MAX_BRUTE_N")) caps.max_n = std::atoll(s);
    if (const char* s = std::getenv("RSC_MAX_BRUTE_R")) caps.max_r = std::atoi(s);
    return caps;
}

void BruteForceCaps::check(const AmbientContext& ctx) const {
    if (ctx.n > max_n || ctx.r > max_r)
        throw ResourceError("brute-force enumeration capped at n<=" + std::to_string(max_n) +
                            ", r<=" + std::to_string(max_r) + " (got n=" +
                            std::to_string(ctx.n) + ", r=" + std::to_string(ctx.r) + ")");
}

Rational probability(const Complex& y, const AmbientContext& ctx, const ProbVector& p) {
    p.validate();
    require_matching_r(ctx, p.r(), "probability");
    ctx.check(y);
    FaceVector f = y.f_vector(ctx.r);
    FaceVector e = external_faces(y, ctx);
    Rational out(1);
    for (int i = 0; i <= ctx.r; ++i) {
        out *= rat_pow(p.at(i), static_cast<unsigned long>(f[static_cast<std::size_t>(i)]));
        out *= rat_pow(p.q(i), static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
    }
    return out;
}

double log_probability(const Complex& y, const AmbientContext& ctx, const ProbVector& p) {
    p.validate();
    require_matching_r(ctx, p.r(), "log_probability");
    ctx.check(y);
    FaceVector f = y.f_vector(ctx.r);
    FaceVector e = external_faces(y, ctx);
    double out = 0.0;
    auto add = [&](const Rational& base, long long exp_count) {
        if (exp_count == 0) return; // 0^0 = 1
        double b = base.get_d();
        if (b == 0.0) {
            out = -std::numeric_limits<double>::infinity();
            return;
        }
        out += static_cast<double>(exp_count) * std::log(b);
    };
    for (int i = 0; i <= ctx.r; ++i) {
        add(p.at(i), f[static_cast<std::size_t>(i)]);
        add(p.q(i), e[static_cast<std::size_t>(i)]);
    }
    return out;
}

void check_sandwich_precondition(const Complex& a, const Complex& b,
                                 const AmbientContext& ctx) {
    ctx.check(a);
    ctx.check(b);
    if (!b.contains_complex(a))
        throw PreconditionError("sandwich: A is not a subcomplex of B");
    Face witness_face, witness_bd;
    bool ok = true;
    visit_external_faces(b, ctx, [&](const Face& sigma) {
        Face sub;
        for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
            sub.clear();
            for (std::size_t j = 0; j < sigma.size(); ++j)
                if (j != drop) sub.push_back(sigma[j]);
            if (!a.has_face(sub)) {
                ok = false;
                witness_face = sigma;
                witness_bd = sub;
                return false;
            }
        }
        return true;
    });
    if (!ok)
        throw PreconditionError("sandwich: external face " + face_str(witness_face) +
                                " of B has boundary face " + face_str(witness_bd) +
                                " outside A");
}

Rational sandwich_probability(const Complex& a, const Complex& b, const AmbientContext& ctx,
                              const ProbVector& p) {
    p.validate();
    require_matching_r(ctx, p.r(), "sandwich_probability");
    check_sandwich_precondition(a, b, ctx);
    FaceVector fa = a.f_vector(ctx.r);
    FaceVector eb = external_faces(b, ctx);
    Rational out(1);
    for (int i = 0; i <= ctx.r; ++i) {
        out *= rat_pow(p.at(i), static_cast<unsigned long>(fa[static_cast<std::size_t>(i)]));
        out *= rat_pow(p.q(i), static_cast<unsigned long>(eb[static_cast<std::size_t>(i)]));
    }
    return out;
}

void for_each_sandwich(const Complex& a, const Complex& b,
                       const std::function<void(const Complex&)>& fn) {
    if (!b.contains_complex(a))
        throw DomainError("for_each_sandwich: A is not a subcomplex of B");

    // chosen[d] accumulates the faces of the complex under construction.
    std::vector<std::vector<Face>> chosen(static_cast<std::size_t>(b.dim()) + 1);

    std::function<void(int)> recurse = [&](int d) {
        if (d > b.dim()) {
            std::vector<std::vector<Face>> trimmed(chosen.begin(), chosen.end());
            fn(Complex::from_faces_by_dim(trimmed));
            return;
        }
        auto& level = chosen[static_cast<std::size_t>(d)];
        std::vector<Face> mandatory;
        if (d <= a.dim()) {
            const FaceSet& fs = a.faces(d);
            for (std::size_t k = 0; k < fs.size(); ++k)
                mandatory.emplace_back(fs[k].begin(), fs[k].end());
        }
        // Optional faces: in B, not in A, whole boundary already chosen.
        std::vector<Face> optional;
        const FaceSet& bs = b.faces(d);
        std::vector<Face> prev;
        if (d > 0) prev = chosen[static_cast<std::size_t>(d) - 1];
        std::sort(prev.begin(), prev.end());
        for (std::size_t k = 0; k < bs.size(); ++k) {
            Face f(bs[k].begin(), bs[k].end());
            if (d <= a.dim() && a.faces(d).contains(f)) continue;
            bool eligible = true;
            if (d > 0) {
                Face sub;
                for (std::size_t drop = 0; drop < f.size() && eligible; ++drop) {
                    sub.clear();
                    for (std::size_t j = 0; j < f.size(); ++j)
                        if (j != drop) sub.push_back(f[j]);
                    eligible = std::binary_search(prev.begin(), prev.end(), sub);
                }
            }
            if (eligible) optional.push_back(std::move(f));
        }
        if (optional.size() > 30)
            throw ResourceError("for_each_sandwich: more than 2^30 choices at one level");
        const std::uint64_t limit = 1ull << optional.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            level = mandatory;
            for (std::size_t i = 0; i < optional.size(); ++i)
                if (mask & (1ull << i)) level.push_back(optional[i]);
            recurse(d + 1);
        }
        level.clear();
    };

    if (b.is_empty()) {
        fn(Complex());
        return;
    }
    recurse(0);
}

void for_each_subcomplex(const AmbientContext& ctx,
                         const std::function<void(const Complex&)>& fn) {
    if (ctx.n < 1 || ctx.r < 0) throw DomainError("bad ambient context");
    for_each_sandwich(Complex(), full_skeleton(ctx.n, ctx.r), fn);
}

std::vector<Complex> all_subcomplexes(const AmbientContext& ctx) {
    std::vector<Complex> out;
    for_each_subcomplex(ctx, [&](const Complex& y) { out.push_back(y); });
    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        long long tx = x.total_face_count(), ty = y.total_face_count();
        if (tx != ty) return tx < ty;
        return x.canonical_key() < y.canonical_key();
    });
    return out;
}

Rational partition_sum(const AmbientContext& ctx, const ProbVector& p,
                       const BruteForceCaps& caps) {
    caps.check(ctx);
    p.validate();
    require_matching_r(ctx, p.r(), "partition_sum");
    Rational sum(0);
    for_each_subcomplex(ctx, [&](const Complex& y) { sum += probability(y, ctx, p); });
    return sum;
}

double log_expected_copies(const Complex& s, const AmbientContext& ctx, const ProbVector& p) {
    p.validate();
    require_matching_r(ctx, p.r(), "expected_copies");
    if (s.dim() > ctx.r)
        throw DomainError("expected_copies: dim S exceeds ambient r");
    const long long k = static_cast<long long>(s.vertex_count());
    if (k > ctx.n) return -std::numeric_limits<double>::infinity();
    double out = std::lgamma(static_cast<double>(ctx.n) + 1.0) -
                 std::lgamma(static_cast<double>(ctx.n - k) + 1.0);
    for (int i = 0; i <= s.dim(); ++i) {
        long long fi = s.face_count(i);
        if (fi == 0) continue;
        double pd = p.p_d(i);
        if (pd == 0.0) return -std::numeric_limits<double>::infinity();
        out += static_cast<double>(fi) * std::log(pd);
    }
    return out;
}

double expected_copies(const Complex& s, const AmbientContext& ctx, const ProbVector& p) {
    return std::exp(log_expected_copies(s, ctx, p));
}

ProbVector gibbs_to_p(const GibbsParams& g) {
    g.validate();
    constexpr double kTol = 1e-12;
    std::vector<Rational> p;
    for (std::size_t i = 0; i < g.beta.size(); ++i) {
        double eb = std::exp(g.beta[i]);
        double eg = std::exp(g.gamma[i]);
        if (std::abs(eb + eg - 1.0) > kTol)
            throw DomainError("gibbs_to_p: e^beta + e^gamma != 1 at level " +
                              std::to_string(i));
        p.emplace_back(eb);
    }
    return ProbVector::of(std::move(p));
}

GibbsParams p_to_gibbs(const ProbVector& p) {
    p.validate();
    GibbsParams g;
    for (int i = 0; i <= p.r(); ++i) {
        double pd = p.p_d(i);
        if (pd <= 0.0 || pd >= 1.0)
            throw DomainError("p_to_gibbs: requires 0 < p_i < 1");
        g.beta.push_back(std::log(pd));
        g.gamma.push_back(std::log1p(-pd));
    }
    return g;
}

double gibbs_energy(const Complex& y, const AmbientContext& ctx, const GibbsParams& g) {
    g.validate();
    require_matching_r(ctx, g.r(), "gibbs_energy");
    ctx.check(y);
    FaceVector f = y.f_vector(ctx.r);
    FaceVector e = external_faces(y, ctx);
    double h = 0.0;
    for (int i = 0; i <= ctx.r; ++i)
        h += g.beta[static_cast<std::size_t>(i)] * static_cast<double>(f[static_cast<std::size_t>(i)]) +
             g.gamma[static_cast<std::size_t>(i)] * static_cast<double>(e[static_cast<std::size_t>(i)]);
    return h;
}

double gibbs_partition(const AmbientContext& ctx, const GibbsParams& g,
                       const BruteForceCaps& caps) {
    caps.check(ctx);
    g.validate();
    require_matching_r(ctx, g.r(), "gibbs_partition");
    double z = 0.0;
    for_each_subcomplex(ctx, [&](const Complex& y) { z += std::exp(gibbs_energy(y, ctx, g)); });
    return z;
}

} // namespace rsc
