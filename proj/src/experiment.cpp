#include "rsc/experiment.hpp"

#include "rsc/errors.hpp"
#include "rsc/prediction.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

namespace rsc {

namespace {

int worker_count(const ExperimentConfig& cfg, long long trials) {
    int t = cfg.threads > 0 ? cfg.threads
                            : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<long long>(t) > trials) t = static_cast<int>(trials);
    return t;
}

/// Runs fn(t) for t in [0, trials) across workers; fn must be pure per t.
void parallel_trials(long long trials, int workers, const std::function<void(long long)>& fn) {
    if (workers <= 1) {
        for (long long t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<long long> next{0};
    auto body = [&] {
        for (;;) {
            const long long t = next.fetch_add(1);
            if (t >= trials) return;
            fn(t);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

std::string dimension_token(const DimensionPrediction& p) {
    if (p.degenerate) return p.boundary ? "degenerate~" : "degenerate";
    std::string s = (p.exact ? "dim=" : "dim>=") + std::to_string(p.lower);
    if (p.boundary) s += "~";
    return s;
}

std::string format_freq(double f) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", f);
    return buf;
}

} // namespace

int ExperimentRecord::dim_mode() const {
    int mode = 0;
    long long best = -1;
    for (const auto& [d, c] : dim_histogram)
        if (c > best) {
            best = c;
            mode = d;
        }
    return mode;
}

double ExperimentRecord::dim_mass() const {
    if (trials == 0 || dim_histogram.empty()) return 0.0;
    auto it = dim_histogram.find(dim_mode());
    return static_cast<double>(it->second) / static_cast<double>(trials);
}

ExperimentRecord estimate_containment(const Complex& s, const ExponentVector& alpha,
                                      long long n, long long trials, std::uint64_t seed,
                                      const ExperimentConfig& cfg) {
    alpha.validate();
    if (trials < 1) throw DomainError("estimate_containment: trials must be >= 1");
    if (s.dim() > alpha.r())
        throw DomainError("estimate_containment: dim S exceeds r = alpha length - 1");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentRecord rec;
    rec.alpha = alpha;
    rec.n = n;
    rec.trials = trials;
    rec.seed = seed;
    rec.predicted = to_string(containment_verdict(s, alpha).value);

    SamplerConfig scfg{AmbientContext{n, alpha.r()}, alpha.to_probs(n), seed};
    scfg.validate();
    std::vector<signed char> results(static_cast<std::size_t>(trials), 0);
    parallel_trials(trials, worker_count(cfg, trials), [&](long long t) {
        Complex y = sample_trial(scfg, static_cast<std::uint64_t>(t));
        switch (contains_copy_budgeted(s, y, cfg.node_budget)) {
        case ContainResult::found: results[static_cast<std::size_t>(t)] = 1; break;
        case ContainResult::not_found: results[static_cast<std::size_t>(t)] = 0; break;
        case ContainResult::budget_exhausted: results[static_cast<std::size_t>(t)] = -1; break;
        }
    });
    long long found = 0, inconclusive = 0;
    for (signed char r : results) {
        if (r == 1) ++found;
        if (r == -1) ++inconclusive;
    }
    rec.inconclusive = inconclusive;
    const long long conclusive = trials - inconclusive;
    rec.contain_freq = conclusive > 0
                           ? static_cast<double>(found) / static_cast<double>(conclusive)
                           : 0.0;
    rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rec;
}

ExperimentRecord estimate_dimension(const ExponentVector& alpha, long long n, int r,
                                    long long trials, std::uint64_t seed,
                                    const ExperimentConfig& cfg) {
    alpha.validate();
    if (trials < 1) throw DomainError("estimate_dimension: trials must be >= 1");
    if (alpha.r() != r)
        throw DomainError("estimate_dimension: alpha has length " +
                          std::to_string(alpha.r() + 1) + ", expected r+1");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentRecord rec;
    rec.alpha = alpha;
    rec.n = n;
    rec.trials = trials;
    rec.seed = seed;
    rec.predicted = dimension_token(predict_dimension(alpha));

    SamplerConfig scfg{AmbientContext{n, r}, alpha.to_probs(n), seed};
    scfg.validate();
    std::vector<int> dims(static_cast<std::size_t>(trials), 0);
    parallel_trials(trials, worker_count(cfg, trials), [&](long long t) {
        dims[static_cast<std::size_t>(t)] =
            sample_trial(scfg, static_cast<std::uint64_t>(t)).dim();
    });
    for (int d : dims) ++rec.dim_histogram[d];
    rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rec;
}

std::vector<ExperimentRecord> threshold_sweep(
    const Complex& s, const std::vector<ExponentVector>& alpha_grid,
    const std::vector<long long>& n_list, long long trials, std::uint64_t seed,
    const ExperimentConfig& cfg, const std::function<void(const ExperimentRecord&)>& on_record) {
    if (alpha_grid.empty() || n_list.empty())
        throw DomainError("threshold_sweep: empty grid");
    std::vector<ExperimentRecord> out;
    std::uint64_t cell = 0;
    for (const auto& alpha : alpha_grid) {
        for (long long n : n_list) {
            ExperimentRecord rec;
            try {
                rec = estimate_containment(s, alpha, n, trials, seed + cell, cfg);
            } catch (const Error& e) {
                rec.alpha = alpha;
                rec.n = n;
                rec.trials = trials;
                rec.seed = seed + cell;
                rec.error = e.what();
            }
            if (on_record) on_record(rec);
            out.push_back(std::move(rec));
            ++cell;
        }
    }
    return out;
}

std::string csv_header(int r) {
    std::ostringstream os;
    for (int i = 0; i <= r; ++i) os << "alpha_" << i << ',';
    os << "n,trials,contain_freq,inconclusive,dim_mode,dim_mass,predicted,seed";
    return os.str();
}

std::string csv_row(const ExperimentRecord& rec, int r) {
    if (rec.alpha.r() != r)
        throw DomainError("csv_row: record alpha length does not match header");
    std::ostringstream os;
    for (int i = 0; i <= r; ++i) os << rat_str(rec.alpha.at(i)) << ',';
    os << rec.n << ',' << rec.trials << ',';
    if (rec.contain_freq) os << format_freq(*rec.contain_freq);
    os << ',' << rec.inconclusive << ',';
    if (!rec.dim_histogram.empty())
        os << rec.dim_mode() << ',' << format_freq(rec.dim_mass());
    else
        os << ',';
    os << ',' << (rec.error.empty() ? rec.predicted : "error:" + rec.error) << ','
       << rec.seed;
    return os.str();
}

std::string to_csv(const std::vector<ExperimentRecord>& records, int r) {
    std::ostringstream os;
    os << csv_header(r) << '\n';
    for (const auto& rec : records) os << csv_row(rec, r) << '\n';
    return os.str();
}

std::string to_jsonl(const std::vector<ExperimentRecord>& records) {
    std::ostringstream os;
    for (const auto& rec : records) {
        nlohmann::json j;
        nlohmann::json alpha = nlohmann::json::array();
        for (int i = 0; i <= rec.alpha.r(); ++i) alpha.push_back(rat_str(rec.alpha.at(i)));
        j["alpha"] = std::move(alpha);
        j["n"] = rec.n;
        j["trials"] = rec.trials;
        if (rec.contain_freq) j["contain_freq"] = *rec.contain_freq;
        j["inconclusive"] = rec.inconclusive;
        if (!rec.dim_histogram.empty()) {
            nlohmann::json h = nlohmann::json::object();
            for (const auto& [d, c] : rec.dim_histogram) h[std::to_string(d)] = c;
            j["dim_histogram"] = std::move(h);
        }
        j["predicted"] = rec.predicted;
        if (!rec.error.empty()) j["error"] = rec.error;
        j["seed"] = rec.seed;
        os << j.dump() << '\n';
    }
    return os.str();
}

} // namespace rsc
