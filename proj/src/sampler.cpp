#include "rsc/sampler.hpp"

#include "rsc/errors.hpp"
#include "rsc/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace rsc {

void SamplerConfig::validate() const {
    p.validate();
    if (ctx.n < 1 || ctx.r < 0) throw DomainError("SamplerConfig: bad ambient context");
    if (p.r() != ctx.r)
        throw DomainError("SamplerConfig: p has length " + std::to_string(p.r() + 1) +
                          ", expected r+1=" + std::to_string(ctx.r + 1));
}

namespace {

// Lex-ordered fixed-arity tuples over compact vertex indices.
struct IndexFaces {
    int arity = 0;
    std::vector<int> flat;

    std::size_t size() const { return arity == 0 ? 0 : flat.size() / arity; }
    const int* at(std::size_t k) const { return flat.data() + k * static_cast<std::size_t>(arity); }
    bool contains(const int* face) const {
        std::size_t lo = 0, hi = size();
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            const int* rec = at(mid);
            if (std::lexicographical_compare(rec, rec + arity, face, face + arity))
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo < size() && std::equal(at(lo), at(lo) + arity, face);
    }
};

} // namespace

Complex sample_trial(const SamplerConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    CoinStream coin(trial_seed(cfg.seed, trial));
    const long long n = cfg.ctx.n;
    const int r = cfg.ctx.r;

    // Level 0: one coin per ambient vertex, ascending.
    std::vector<Vertex> kept;
    const double p0 = cfg.p.p_d(0);
    for (Vertex v = 1; v <= n; ++v)
        if (coin.bernoulli(p0)) kept.push_back(v);

    std::vector<FaceSet> levels;
    levels.push_back(FaceSet::from_sorted_flat(1, std::vector<Vertex>(kept)));
    const std::size_t k = kept.size();
    if (r == 0 || k == 0) return Complex::from_levels(std::move(levels));

    // Level 1: one coin per pair of kept vertices, lex order.
    const std::size_t words = (k + 63) / 64;
    std::vector<std::uint64_t> adj(k * words, 0);
    IndexFaces prev;
    prev.arity = 2;
    const double p1 = cfg.p.p_d(1);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (coin.bernoulli(p1)) {
                prev.flat.push_back(static_cast<int>(a));
                prev.flat.push_back(static_cast<int>(b));
                adj[a * words + b / 64] |= 1ull << (b % 64);
                adj[b * words + a / 64] |= 1ull << (a % 64);
            }

    auto emit_level = [&](const IndexFaces& faces) {
        std::vector<Vertex> flat;
        flat.reserve(faces.flat.size());
        for (int idx : faces.flat) flat.push_back(kept[static_cast<std::size_t>(idx)]);
        levels.push_back(FaceSet::from_sorted_flat(faces.arity, std::move(flat)));
    };
    emit_level(prev);

    // Levels i >= 2: extend each (i-1)-face by a common neighbor above its
    // largest vertex, verify the remaining boundary faces, flip one coin per
    // surviving candidate. The enumeration order is lexicographic.
    std::vector<std::uint64_t> mask(words);
    std::vector<int> cand;
    for (int i = 2; i <= r; ++i) {
        if (prev.size() == 0) break;
        IndexFaces next;
        next.arity = i + 1;
        const double pi = cfg.p.p_d(i);
        for (std::size_t t = 0; t < prev.size(); ++t) {
            const int* tau = prev.at(t);
            const std::uint64_t* row0 = adj.data() + static_cast<std::size_t>(tau[0]) * words;
            std::copy(row0, row0 + words, mask.begin());
            for (int j = 1; j < prev.arity; ++j) {
                const std::uint64_t* row = adj.data() + static_cast<std::size_t>(tau[j]) * words;
                for (std::size_t w = 0; w < words; ++w) mask[w] &= row[w];
            }
            const int lo = tau[prev.arity - 1] + 1;
            for (std::size_t w = static_cast<std::size_t>(lo) / 64; w < words; ++w) {
                std::uint64_t bits = mask[w];
                if (w == static_cast<std::size_t>(lo) / 64 && lo % 64)
                    bits &= ~((1ull << (lo % 64)) - 1);
                while (bits) {
                    const int v = static_cast<int>(w * 64 +
                                                   static_cast<std::size_t>(std::countr_zero(bits)));
                    bits &= bits - 1;
                    bool ok = true;
                    if (i >= 3) {
                        // The mask only certifies edges to v; check the
                        // (i-1)-dimensional boundary faces through v.
                        for (int drop = 0; drop < prev.arity && ok; ++drop) {
                            cand.clear();
                            for (int j = 0; j < prev.arity; ++j)
                                if (j != drop) cand.push_back(tau[j]);
                            cand.push_back(v);
                            ok = prev.contains(cand.data());
                        }
                    }
                    if (!ok) continue;
                    if (coin.bernoulli(pi)) {
                        next.flat.insert(next.flat.end(), tau, tau + prev.arity);
                        next.flat.push_back(v);
                    }
                }
            }
        }
        if (next.size() == 0) break;
        emit_level(next);
        prev = std::move(next);
    }
    return Complex::from_levels(std::move(levels));
}

Complex sample(const SamplerConfig& cfg) {
    return sample_trial(cfg, 0);
}

void sample_batch(const SamplerConfig& cfg, std::uint64_t trials,
                  const std::function<void(std::uint64_t, const Complex&)>& fn) {
    if (trials < 1) throw DomainError("sample_batch: trials must be >= 1");
    for (std::uint64_t t = 0; t < trials; ++t) fn(t, sample_trial(cfg, t));
}

ProbVector preset(const std::string& name, const Rational& p, int r) {
    if (p < 0 || p > 1) throw DomainError("preset: p outside [0,1]");
    auto ones_with = [&](int rr, int level, const Rational& value) {
        std::vector<Rational> v(static_cast<std::size_t>(rr) + 1, Rational(1));
        v[static_cast<std::size_t>(level)] = value;
        return ProbVector::of(std::move(v));
    };
    if (name == "erdos-renyi") {
        if (r != -1 && r != 1) throw DomainError("preset erdos-renyi: r must be 1");
        return ones_with(1, 1, p);
    }
    if (name == "linial-meshulam") {
        if (r != -1 && r != 2) throw DomainError("preset linial-meshulam: r must be 2");
        return ones_with(2, 2, p);
    }
    if (name == "meshulam-wallach") {
        if (r < 1) throw DomainError("preset meshulam-wallach: needs r >= 1");
        return ones_with(r, r, p);
    }
    if (name == "clique") {
        if (r < 1) throw DomainError("preset clique: needs r >= 1");
        return ones_with(r, 1, p);
    }
    throw DomainError("unknown preset '" + name + "'");
}

VertexStats vertex_stats(long long n, const Rational& p0, double eps) {
    if (n < 1) throw DomainError("vertex_stats: n must be >= 1");
    if (p0 < 0 || p0 > 1) throw DomainError("vertex_stats: p0 outside [0,1]");
    if (eps <= 0.0 || eps >= 0.5) throw DomainError("vertex_stats: eps outside (0, 1/2)");
    VertexStats st{};
    const double p = p0.get_d();
    st.omega = static_cast<double>(n) * p;
    st.mean = st.omega;
    st.variance = st.omega * (1.0 - p);
    st.delta = st.omega > 0.0 ? std::pow(st.omega, -0.5 + eps)
                              : std::numeric_limits<double>::infinity();
    return st;
}

} // namespace rsc
