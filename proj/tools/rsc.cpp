#include "rsc/corpus.hpp"
#include "rsc/density.hpp"
#include "rsc/errors.hpp"
#include "rsc/experiment.hpp"
#include "rsc/io.hpp"
#include "rsc/measure.hpp"
#include "rsc/prediction.hpp"
#include "rsc/sampler.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

std::vector<rsc::Rational> parse_rational_list(const std::string& csv) {
    std::vector<rsc::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rsc::parse_rational(item));
    if (out.empty()) throw rsc::MalformedInputError("empty list '" + csv + "'");
    return out;
}

// JSON numbers go through their shortest round-trip decimal so that 0.6
// means 3/5, not the nearest double.
rsc::Rational rational_from_json(const json& j) {
    if (j.is_string()) return rsc::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return rsc::Rational(static_cast<long>(j.get<long long>()));
    if (j.is_number_float()) {
        char buf[32];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), j.get<double>());
        if (ec != std::errc()) throw rsc::MalformedInputError("bad number in spec");
        return rsc::parse_rational(std::string(buf, p));
    }
    throw rsc::MalformedInputError("expected a number or rational string");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rsc::MalformedInputError("cannot write '" + path + "'");
    out << content;
}

struct ComplexSource {
    std::string path;
    std::string corpus_name;

    void add_options(CLI::App* cmd) {
        auto* p = cmd->add_option("--complex", path, "complex file (facet text or JSON)");
        auto* c = cmd->add_option("--corpus", corpus_name,
                                  "bundled complex: simplex:<s>, boundary:<s>, st:<t>, "
                                  "torus7, rp2-6, disc-unbalanced");
        p->excludes(c);
        c->excludes(p);
    }

    rsc::Complex load() const {
        if (!path.empty()) return rsc::io::load_complex_file(path);
        if (!corpus_name.empty()) return rsc::corpus::by_name(corpus_name);
        throw rsc::MalformedInputError("need --complex or --corpus");
    }
};

json verdict_to_json(const rsc::Verdict& v) {
    return {{"verdict", rsc::to_string(v.value)},
            {"exponent", v.exponent},
            {"binding", v.binding},
            {"binding_value", rsc::rat_str(v.binding_value)}};
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"multi-parameter random simplicial complexes Y_r(n, p)"};
    app.require_subcommand(1);

    // ---- sample ----------------------------------------------------------
    auto* sample_cmd = app.add_subcommand("sample", "draw a random complex");
    struct {
        long long n = 0;
        int r = 0;
        std::string p_csv, alpha_csv, format = "text", output;
        std::uint64_t seed = rsc::kDefaultSeed, trial = 0;
    } sample_opt;
    sample_cmd->add_option("--n", sample_opt.n, "ambient vertex count")->required();
    sample_cmd->add_option("--r", sample_opt.r, "dimension cap")->required();
    auto* po = sample_cmd->add_option("--p", sample_opt.p_csv, "p_0,...,p_r");
    auto* ao = sample_cmd->add_option("--alpha", sample_opt.alpha_csv,
                                      "alpha_0,...,alpha_r (p_i = n^-alpha_i)");
    po->excludes(ao);
    ao->excludes(po);
    sample_cmd->add_option("--seed", sample_opt.seed, "RNG seed (default 1729)");
    sample_cmd->add_option("--trial", sample_opt.trial, "trial index (default 0)");
    sample_cmd->add_option("--format", sample_opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sample_cmd->add_option("-o,--output", sample_opt.output, "output file (default stdout)");
    sample_cmd->callback([&] {
        rsc::ProbVector p;
        if (!sample_opt.p_csv.empty())
            p = rsc::ProbVector::of(parse_rational_list(sample_opt.p_csv));
        else if (!sample_opt.alpha_csv.empty())
            p = rsc::ExponentVector{parse_rational_list(sample_opt.alpha_csv)}.to_probs(
                sample_opt.n);
        else
            throw rsc::MalformedInputError("need --p or --alpha");
        rsc::SamplerConfig cfg{rsc::AmbientContext{sample_opt.n, sample_opt.r}, p,
                               sample_opt.seed};
        rsc::Complex y = rsc::sample_trial(cfg, sample_opt.trial);
        if (sample_opt.format == "json") {
            rsc::io::SampleMeta meta{sample_opt.n, sample_opt.r, sample_opt.seed,
                                     sample_opt.trial};
            write_output(sample_opt.output, rsc::io::complex_to_json(y, meta).dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "# sampled complex: n=" << sample_opt.n << " r=" << sample_opt.r
               << " seed=" << sample_opt.seed << " trial=" << sample_opt.trial << "\n";
            rsc::io::save_complex_text(os, y);
            write_output(sample_opt.output, os.str());
        }
    });

    // ---- prob ------------------------------------------------------------
    auto* prob_cmd = app.add_subcommand("prob", "exact probability of a complex");
    struct {
        ComplexSource src;
        long long n = 0;
        std::string p_csv, output;
        bool log_space = false;
    } prob_opt;
    prob_opt.src.add_options(prob_cmd);
    prob_cmd->add_option("--n", prob_opt.n, "ambient vertex count")->required();
    prob_cmd->add_option("--p", prob_opt.p_csv, "p_0,...,p_r")->required();
    prob_cmd->add_flag("--log", prob_opt.log_space, "print the natural log instead");
    prob_cmd->add_option("-o,--output", prob_opt.output, "output file (default stdout)");
    prob_cmd->callback([&] {
        rsc::Complex y = prob_opt.src.load();
        rsc::ProbVector p = rsc::ProbVector::of(parse_rational_list(prob_opt.p_csv));
        rsc::AmbientContext ctx{prob_opt.n, p.r()};
        std::ostringstream os;
        if (prob_opt.log_space)
            os << rsc::log_probability(y, ctx, p) << "\n";
        else
            os << rsc::rat_str(rsc::probability(y, ctx, p)) << "\n";
        write_output(prob_opt.output, os.str());
    });

    // ---- density ---------------------------------------------------------
    auto* density_cmd = app.add_subcommand("density", "density invariants and domain");
    struct {
        ComplexSource src;
        int r = -1;
        std::string format = "json", output;
    } density_opt;
    density_opt.src.add_options(density_cmd);
    density_cmd->add_option("--r", density_opt.r, "exponent dimension (default dim S)");
    density_cmd->add_option("--format", density_opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    density_cmd->add_option("-o,--output", density_opt.output, "output file");
    density_cmd->callback([&] {
        rsc::Complex s = density_opt.src.load();
        const int r = density_opt.r >= 0 ? density_opt.r : std::max(s.dim(), 0);
        rsc::DensityProfile dp = rsc::density_profile(s, r);
        rsc::DensityDomain dom = rsc::reduced_density_domain(s, r);
        rsc::BalanceReport bal = rsc::balance_report(s, r);
        json j;
        j["f"] = s.f_vector(r).counts;
        json mu = json::array(), nu = json::array();
        for (int i = 0; i <= r; ++i) mu.push_back(dp.mu_str(i));
        for (int i = 1; i <= r; ++i) nu.push_back(rsc::rat_str(dp.nu_i(i)));
        j["mu"] = std::move(mu);
        j["nu"] = std::move(nu);
        j["balanced"] = bal.balanced;
        j["strictly_balanced"] = bal.strictly_balanced;
        j["domain"] = rsc::io::domain_to_json(dom);
        if (r == 2) {
            try {
                j["polygon_2d"] = rsc::io::polygon_to_json(rsc::polygon_2d(dom));
            } catch (const rsc::DomainError&) {
                j["polygon_2d"] = nullptr; // unbounded
            }
        }
        if (density_opt.format == "json") {
            write_output(density_opt.output, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "f = " << s.f_vector(r).str() << "\nmu = [";
            for (int i = 0; i <= r; ++i) os << (i ? ", " : "") << dp.mu_str(i);
            os << "]\nbalanced = " << (bal.balanced ? "true" : "false")
               << "\nstrictly_balanced = " << (bal.strictly_balanced ? "true" : "false")
               << "\nconstraints:\n";
            for (const auto& c : dom.constraints) {
                os << "  ";
                for (std::size_t i = 0; i < c.nu.size(); ++i) {
                    if (i) os << " + ";
                    os << rsc::rat_str(c.nu[i]) << "*a" << i + 1;
                }
                os << " < 1   (W = {";
                for (std::size_t i = 0; i < c.witness.size(); ++i)
                    os << (i ? "," : "") << c.witness[i];
                os << "})\n";
            }
            write_output(density_opt.output, os.str());
        }
    });

    // ---- balance ---------------------------------------------------------
    auto* balance_cmd = app.add_subcommand("balance", "balancedness verdict");
    struct {
        ComplexSource src;
        int r = -1;
        std::string format = "text", output;
    } balance_opt;
    balance_opt.src.add_options(balance_cmd);
    balance_cmd->add_option("--r", balance_opt.r, "exponent dimension (default dim S)");
    balance_cmd->add_option("--format", balance_opt.format, "text|json")
        ->check(CLI::IsMember({"json", "text"}));
    balance_cmd->add_option("-o,--output", balance_opt.output, "output file");
    balance_cmd->callback([&] {
        rsc::Complex s = balance_opt.src.load();
        const int r = balance_opt.r >= 0 ? balance_opt.r : std::max(s.dim(), 0);
        rsc::BalanceReport bal = rsc::balance_report(s, r);
        if (balance_opt.format == "json") {
            json j{{"balanced", bal.balanced},
                   {"strictly_balanced", bal.strictly_balanced},
                   {"witness", bal.witness},
                   {"strict_witness", bal.strict_witness}};
            write_output(balance_opt.output, j.dump(2) + "\n");
            return;
        }
        std::ostringstream os;
        if (!bal.balanced) {
            os << "unbalanced, witness W = {";
            for (std::size_t i = 0; i < bal.witness.size(); ++i)
                os << (i ? "," : "") << bal.witness[i];
            os << "}\n";
        } else if (!bal.strictly_balanced) {
            os << "balanced (not strictly; W = {";
            for (std::size_t i = 0; i < bal.strict_witness.size(); ++i)
                os << (i ? "," : "") << bal.strict_witness[i];
            os << "} is equally dense)\n";
        } else {
            os << "strictly balanced\n";
        }
        write_output(balance_opt.output, os.str());
    });

    // ---- predict ---------------------------------------------------------
    auto* predict_cmd = app.add_subcommand("predict", "a.a.s. containment verdict");
    struct {
        ComplexSource src;
        std::string alpha_csv, format = "text", output;
    } predict_opt;
    predict_opt.src.add_options(predict_cmd);
    predict_cmd->add_option("--alpha", predict_opt.alpha_csv, "alpha_0,...,alpha_r")
        ->required();
    predict_cmd->add_option("--format", predict_opt.format, "text|json")
        ->check(CLI::IsMember({"json", "text"}));
    predict_cmd->add_option("-o,--output", predict_opt.output, "output file");
    predict_cmd->callback([&] {
        rsc::Complex s = predict_opt.src.load();
        rsc::ExponentVector alpha{parse_rational_list(predict_opt.alpha_csv)};
        rsc::Verdict v = rsc::containment_verdict(s, alpha);
        if (predict_opt.format == "json") {
            write_output(predict_opt.output, verdict_to_json(v).dump(2) + "\n");
            return;
        }
        std::ostringstream os;
        switch (v.value) {
        case rsc::ContainmentValue::contains_aas: os << "contains a.a.s."; break;
        case rsc::ContainmentValue::not_contains_aas: os << "does not contain a.a.s."; break;
        case rsc::ContainmentValue::indeterminate_boundary: os << "indeterminate (boundary)"; break;
        }
        os << "  [first-moment exponent " << v.exponent << ", binding W = {";
        for (std::size_t i = 0; i < v.binding.size(); ++i) os << (i ? "," : "") << v.binding[i];
        os << "} at " << rsc::rat_str(v.binding_value) << "]\n";
        write_output(predict_opt.output, os.str());
    });

    // ---- dim -------------------------------------------------------------
    auto* dim_cmd = app.add_subcommand("dim", "predicted dimension of Y_r(n, n^-alpha)");
    struct {
        std::string alpha_csv, format = "text", output;
        int r = -1, smax = 4;
        std::string clip = "4";
    } dim_opt;
    dim_cmd->add_option("--alpha", dim_opt.alpha_csv, "alpha_0,...,alpha_r")->required();
    dim_cmd->add_option("--r", dim_opt.r, "pad alpha with zeros up to length r+1");
    dim_cmd->add_option("--smax", dim_opt.smax, "largest s for the 2d regions (default 4)");
    dim_cmd->add_option("--clip", dim_opt.clip, "clip box size for unbounded regions");
    dim_cmd->add_option("--format", dim_opt.format, "text|json")
        ->check(CLI::IsMember({"json", "text"}));
    dim_cmd->add_option("-o,--output", dim_opt.output, "output file");
    dim_cmd->callback([&] {
        auto entries = parse_rational_list(dim_opt.alpha_csv);
        while (dim_opt.r >= 0 && static_cast<int>(entries.size()) < dim_opt.r + 1)
            entries.emplace_back(0);
        rsc::ExponentVector alpha{std::move(entries)};
        rsc::DimensionPrediction pred = rsc::predict_dimension(alpha);
        if (dim_opt.format == "text") {
            write_output(dim_opt.output, pred.str() + "\n");
            return;
        }
        json j;
        j["prediction"] = pred.str();
        j["lower"] = pred.lower;
        j["exact"] = pred.exact;
        j["degenerate"] = pred.degenerate;
        j["boundary"] = pred.boundary;
        json ds = json::array();
        for (int s = 0; s <= alpha.r(); ++s)
            ds.push_back(rsc::rat_str(rsc::dimension_functional(alpha, s)));
        j["D"] = std::move(ds);
        json regions = json::array();
        for (const auto& reg :
             rsc::dimension_regions_2d(dim_opt.smax, rsc::parse_rational(dim_opt.clip))) {
            regions.push_back({{"s", reg.s},
                               {"below", {rsc::rat_str(reg.below[0]), rsc::rat_str(reg.below[1])}},
                               {"above", {rsc::rat_str(reg.above[0]), rsc::rat_str(reg.above[1])}},
                               {"bounded", reg.bounded},
                               {"polygon", rsc::io::polygon_to_json(reg.polygon)}});
        }
        j["regions_2d"] = std::move(regions);
        write_output(dim_opt.output, j.dump(2) + "\n");
    });

    // ---- experiment ------------------------------------------------------
    auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiment from a spec file");
    struct {
        std::string spec_path, format = "csv", output;
        int threads = 0;
    } exp_opt;
    exp_cmd->add_option("--spec", exp_opt.spec_path, "experiment spec (JSON)")->required();
    exp_cmd->add_option("--format", exp_opt.format, "csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    exp_cmd->add_option("--threads", exp_opt.threads, "worker cap (0 = hardware)");
    exp_cmd->add_option("-o,--output", exp_opt.output, "output file (default stdout)");
    exp_cmd->callback([&] {
        std::ifstream in(exp_opt.spec_path);
        if (!in) throw rsc::MalformedInputError("cannot open '" + exp_opt.spec_path + "'");
        json spec;
        try {
            in >> spec;
        } catch (const json::exception& e) {
            throw rsc::MalformedInputError(std::string("bad spec JSON: ") + e.what());
        }
        const std::string mode = spec.value("mode", "containment");
        std::vector<rsc::ExponentVector> alphas;
        for (const auto& row : spec.at("alpha")) {
            rsc::ExponentVector a;
            for (const auto& x : row) a.alpha.push_back(rational_from_json(x));
            a.validate();
            alphas.push_back(std::move(a));
        }
        if (alphas.empty()) throw rsc::MalformedInputError("spec: empty alpha grid");
        const int r = alphas.front().r();
        for (const auto& a : alphas)
            if (a.r() != r) throw rsc::MalformedInputError("spec: alpha rows of mixed length");
        std::vector<long long> ns;
        if (spec.at("n").is_array())
            for (const auto& x : spec.at("n")) ns.push_back(x.get<long long>());
        else
            ns.push_back(spec.at("n").get<long long>());
        const long long trials = spec.at("trials").get<long long>();
        const std::uint64_t seed = spec.value("seed", rsc::kDefaultSeed);
        rsc::ExperimentConfig cfg;
        cfg.threads = exp_opt.threads;
        cfg.node_budget = spec.value("node_budget", cfg.node_budget);

        std::vector<rsc::ExperimentRecord> records;
        if (mode == "containment" || mode == "sweep") {
            rsc::Complex s;
            const auto& cj = spec.at("complex");
            if (cj.contains("corpus"))
                s = rsc::corpus::by_name(cj.at("corpus").get<std::string>());
            else if (cj.contains("path"))
                s = rsc::io::load_complex_file(cj.at("path").get<std::string>());
            else
                throw rsc::MalformedInputError("spec: complex needs 'corpus' or 'path'");
            records = rsc::threshold_sweep(s, alphas, ns, trials, seed, cfg);
        } else if (mode == "dimension") {
            std::uint64_t cell = 0;
            for (const auto& alpha : alphas)
                for (long long n : ns) {
                    records.push_back(
                        rsc::estimate_dimension(alpha, n, r, trials, seed + cell, cfg));
                    ++cell;
                }
        } else {
            throw rsc::MalformedInputError("spec: unknown mode '" + mode + "'");
        }
        long long total_ms = 0;
        for (const auto& rec : records) total_ms += rec.wall_time_ms;
        std::cerr << "experiment: " << records.size() << " cells, " << total_ms << " ms\n";
        write_output(exp_opt.output, exp_opt.format == "csv" ? rsc::to_csv(records, r)
                                                             : rsc::to_jsonl(records));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rsc::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rsc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
