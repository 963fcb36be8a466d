#pragma once

#include "rsc/complex.hpp"
#include "rsc/params.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rsc {

/// Fixed library-wide default seed; deliberately not time-based.
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SamplerConfig {
    AmbientContext ctx;
    ProbVector p;
    std::uint64_t seed = kDefaultSeed;

    void validate() const; // p length must be ctx.r + 1
};

/// Draws one complex by the level-by-level lower model: each vertex of
/// {1..n} kept with probability p_0, then each i-simplex whose whole
/// boundary is present kept with probability p_i. Candidates are consumed
/// in lexicographic order, one coin per candidate.
Complex sample(const SamplerConfig& cfg);

/// Trial t of a batch; sample(cfg) == sample_trial(cfg, 0).
Complex sample_trial(const SamplerConfig& cfg, std::uint64_t trial);

/// Streams `trials` independent draws; trial t is reproducible from
/// (seed, t) alone regardless of batch size.
void sample_batch(const SamplerConfig& cfg, std::uint64_t trials,
                  const std::function<void(std::uint64_t, const Complex&)>& fn);

/// Probability presets for the classical special cases:
///   erdos-renyi      (1, p)            r = 1
///   linial-meshulam  (1, 1, p)         r = 2
///   meshulam-wallach (1, ..., 1, p)    given r
///   clique           (1, p, 1, ..., 1) given r
ProbVector preset(const std::string& name, const Rational& p, int r = -1);

struct VertexStats {
    double mean;     // n * p0
    double variance; // n * p0 * (1 - p0)
    double omega;    // = mean
    double delta;    // omega^{-1/2 + eps}

    double band_lo() const { return (1.0 - delta) * omega; }
    double band_hi() const { return (1.0 + delta) * omega; }
};

/// Analytic vertex-count statistics with the concentration band
/// (1 +- delta) * omega, delta = omega^{-1/2+eps}.
VertexStats vertex_stats(long long n, const Rational& p0, double eps = 0.1);

} // namespace rsc
