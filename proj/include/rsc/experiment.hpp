#pragma once

#include "rsc/complex.hpp"
#include "rsc/params.hpp"
#include "rsc/sampler.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsc {

struct ExperimentConfig {
    int threads = 0; // 0 -> hardware concurrency
    long long node_budget = 1'000'000;
};

/// One Monte Carlo measurement cell.
struct ExperimentRecord {
    ExponentVector alpha;
    long long n = 0;
    long long trials = 0;
    std::optional<double> contain_freq; // over conclusive trials
    long long inconclusive = 0;         // embedding searches that hit the budget
    std::map<int, long long> dim_histogram;
    std::uint64_t seed = 0;
    long long wall_time_ms = 0;
    std::string predicted; // verdict carried alongside for plotting
    std::string error;     // nonempty when the cell failed

    /// Most frequent dimension (smallest on ties); meaningful only for
    /// dimension records.
    int dim_mode() const;
    double dim_mass() const; // histogram mass at the mode
};

/// Fraction of sampled complexes from Y_r(n, n^-alpha) containing a copy of
/// S. Trials whose embedding search exhausts the node budget are counted in
/// `inconclusive` and excluded from the frequency denominator.
ExperimentRecord estimate_containment(const Complex& s, const ExponentVector& alpha,
                                      long long n, long long trials, std::uint64_t seed,
                                      const ExperimentConfig& cfg = {});

/// Histogram of dim Y over trials (empty complex counts as -1).
ExperimentRecord estimate_dimension(const ExponentVector& alpha, long long n, int r,
                                    long long trials, std::uint64_t seed,
                                    const ExperimentConfig& cfg = {});

/// One containment record per (alpha, n) cell; cell c runs with seed
/// `seed + c` so a single-cell sweep reproduces estimate_containment
/// exactly. Per-cell errors are captured in the record, never aborting the
/// sweep. Records are streamed through `on_record` as they finish.
std::vector<ExperimentRecord> threshold_sweep(
    const Complex& s, const std::vector<ExponentVector>& alpha_grid,
    const std::vector<long long>& n_list, long long trials, std::uint64_t seed,
    const ExperimentConfig& cfg = {},
    const std::function<void(const ExperimentRecord&)>& on_record = nullptr);

/// CSV with the fixed header
/// alpha_0,...,alpha_r,n,trials,contain_freq,inconclusive,dim_mode,dim_mass,predicted,seed
std::string csv_header(int r);
std::string csv_row(const ExperimentRecord& rec, int r);
std::string to_csv(const std::vector<ExperimentRecord>& records, int r);

/// JSON-lines alternative carrying the full histogram.
std::string to_jsonl(const std::vector<ExperimentRecord>& records);

} // namespace rsc
