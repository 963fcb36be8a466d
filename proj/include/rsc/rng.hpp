#pragma once

#include <cstdint>
#include <random>

namespace rsc {

/// SplitMix64 finalizer (Steele/Lea/Flood). Used only to derive per-trial
/// seeds; the working generator is std::mt19937_64, which the C++ standard
/// pins bit-exactly across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Trial t of a batch runs on mt19937_64 seeded with the t-th value of the
/// SplitMix64 stream started at `seed`. This derivation is part of the
/// reproducibility contract and is frozen.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed + trial * 0x9E3779B97F4A7C15ull);
}

/// One stream of Bernoulli coins. Uniform doubles are produced by the
/// standard 53-bit ladder (x >> 11) * 2^-53, never via distribution objects
/// (those are implementation-defined).
class CoinStream {
public:
    explicit CoinStream(std::uint64_t seed) : gen_(seed) {}

    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p; p=1 always true, p=0 always false.
    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::mt19937_64 gen_;
};

} // namespace rsc
