// polaract: channel polarization experiments from the command line.
//
// Subcommands: sweep <experiment>, evolve, partition, capacity, simulate,
// check-polaractivation. Exit codes: 0 success, 2 configuration error,
// 3 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polaract/sweep.hpp"

namespace {

using polaract::ChannelModel;
using polaract::ConfigError;
using polaract::SweepConfig;

ChannelModel make_channel(const std::string& kind, double p, double p2, int d) {
    if (kind == "bec") return ChannelModel(polaract::Bec{p});
    if (kind == "bsc") return ChannelModel(polaract::Bsc{p});
    if (kind == "erasure") return ChannelModel(polaract::Erasure{p, d});
    if (kind == "pauli-sub") return ChannelModel(polaract::PauliSub{p, p2});
    throw ConfigError("unknown channel kind '" + kind + "'");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polaract - polar-code construction, privacy set algebra and "
                 "successive-cancellation decoding experiments"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and emit CSV + summary");
    std::string experiment;
    sweep->add_option("experiment", experiment,
                      "erasure|polarize|privacy|eve|fidelity-region|bler")
        ->required();
    std::string config_path;
    sweep->add_option("--config", config_path, "JSON config file (flags override it)");
    std::optional<std::string> opt_channel, opt_selection, opt_alignment, opt_out;
    std::optional<double> opt_p, opt_p2, opt_beta, opt_eps, opt_rate;
    std::optional<int> opt_d;
    std::optional<std::uint64_t> opt_trials, opt_seed;
    std::vector<int> opt_k;
    std::vector<double> opt_pgrid;
    bool allow_large = false;
    sweep->add_option("--channel", opt_channel, "bec|bsc");
    sweep->add_option("--p", opt_p, "base / amplitude / Bob channel parameter");
    sweep->add_option("--p2", opt_p2, "phase / Eve channel parameter");
    sweep->add_option("--d", opt_d, "erasure input dimension");
    sweep->add_option("--k", opt_k, "recursion levels (repeatable)");
    sweep->add_option("--p-grid", opt_pgrid, "probability grid (repeatable)");
    sweep->add_option("--beta", opt_beta, "threshold exponent in (0, 0.5)");
    sweep->add_option("--eps", opt_eps, "polarization counting cutoff");
    sweep->add_option("--selection", opt_selection, "rate-capacity|threshold|epsilon");
    sweep->add_option("--alignment", opt_alignment, "complement|aligned");
    sweep->add_option("--rate", opt_rate, "code rate for bler sweeps");
    sweep->add_option("--trials", opt_trials, "Monte Carlo trials per point");
    sweep->add_option("--seed", opt_seed, "RNG seed (mandatory for stochastic sweeps)");
    sweep->add_option("--out", opt_out, "output directory");
    sweep->add_flag("--allow-large", allow_large, "raise the evolution k cap to 22");

    // ---- evolve ----
    auto* ev = app.add_subcommand("evolve", "Write a reliability profile CSV");
    std::string ev_channel = "bec", ev_mode = "threshold", ev_out = ".";
    double ev_p = 0.5, ev_p2 = 0.0, ev_beta = 0.45, ev_rate = 0.5;
    int ev_k = 10, ev_d = 2;
    bool ev_allow_large = false;
    ev->add_option("--channel", ev_channel, "bec|bsc|erasure|pauli-sub");
    ev->add_option("--p", ev_p, "channel parameter (p_z for pauli-sub)");
    ev->add_option("--p2", ev_p2, "second parameter (p_x for pauli-sub)");
    ev->add_option("--d", ev_d, "erasure input dimension");
    ev->add_option("--k", ev_k, "recursion level")->required();
    ev->add_option("--beta", ev_beta, "threshold exponent");
    ev->add_option("--mode", ev_mode, "threshold|rate-target");
    ev->add_option("--rate", ev_rate, "rate for rate-target mode");
    ev->add_option("--out", ev_out, "output directory");
    ev->add_flag("--allow-large", ev_allow_large, "raise the k cap to 25");

    // ---- partition ----
    auto* part = app.add_subcommand("partition",
                                    "Partition indices into S_in/P1/P2/B and summarize");
    std::string pa_channel = "bec", pa_selection = "rate-capacity", pa_alignment = "complement",
                pa_out = ".";
    double pa_p = 0.2, pa_p2 = 0.2, pa_beta = 0.45, pa_value = 0.5;
    int pa_k = 10;
    part->add_option("--channel", pa_channel, "bec|bsc");
    part->add_option("--p", pa_p, "amplitude subchannel parameter");
    part->add_option("--p2", pa_p2, "phase subchannel parameter");
    part->add_option("--k", pa_k, "recursion level")->required();
    part->add_option("--beta", pa_beta, "threshold exponent");
    part->add_option("--selection", pa_selection, "rate-capacity|rate|threshold|epsilon");
    part->add_option("--value", pa_value, "rate or epsilon for those selections");
    part->add_option("--alignment", pa_alignment, "complement|aligned");
    part->add_option("--out", pa_out, "output directory");

    // ---- capacity ----
    auto* cap = app.add_subcommand("capacity", "Print capacity figures as JSON");
    std::string ca_channel = "bec";
    double ca_p = 0.5, ca_p2 = 0.0;
    int ca_d = 2;
    cap->add_option("--channel", ca_channel, "bec|bsc|erasure|pauli-sub");
    cap->add_option("--p", ca_p, "channel parameter (p_z for pauli-sub)");
    cap->add_option("--p2", ca_p2, "second parameter (p_x for pauli-sub)");
    cap->add_option("--d", ca_d, "erasure input dimension");

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "Monte Carlo block-error-rate estimate");
    std::string si_channel = "bec", si_out = ".";
    double si_p = 0.3, si_rate = 0.45;
    int si_k = 10;
    std::uint64_t si_trials = 10000;
    std::optional<std::uint64_t> si_seed;
    sim->add_option("--channel", si_channel, "bec|bsc");
    sim->add_option("--p", si_p, "channel parameter");
    sim->add_option("--k", si_k, "recursion level")->required();
    sim->add_option("--rate", si_rate, "code rate (rate-target construction)");
    sim->add_option("--trials", si_trials, "number of trials");
    sim->add_option("--seed", si_seed, "RNG seed")->required();
    sim->add_option("--out", si_out, "output directory");

    // ---- check-polaractivation ----
    auto* chk = app.add_subcommand("check-polaractivation",
                                   "Evaluate the rate-increment condition");
    double ck_c_sym = 0.0, ck_c_low = 0.0, ck_c_star = 0.0;
    chk->add_option("--c-sym", ck_c_sym, "current symmetric classical rate")->required();
    chk->add_option("--c-low", ck_c_low, "critical lower bound")->required();
    chk->add_option("--c-sym-star", ck_c_star, "peak symmetric capacity")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) {
            SweepConfig cfg;
            if (!config_path.empty()) cfg = SweepConfig::from_json_text(slurp(config_path));
            cfg.experiment = experiment;
            if (opt_channel) cfg.channel = *opt_channel;
            if (opt_p) cfg.p = *opt_p;
            if (opt_p2) cfg.p2 = *opt_p2;
            if (opt_d) cfg.d = *opt_d;
            if (!opt_k.empty()) cfg.k_grid = opt_k;
            if (!opt_pgrid.empty()) cfg.p_grid = opt_pgrid;
            if (opt_beta) cfg.beta = *opt_beta;
            if (opt_eps) cfg.epsilon = *opt_eps;
            if (opt_selection) cfg.selection = *opt_selection;
            if (opt_alignment) cfg.alignment = *opt_alignment;
            if (opt_rate) cfg.rate = *opt_rate;
            if (opt_trials) cfg.trials = *opt_trials;
            if (opt_seed) cfg.seed = *opt_seed;
            if (opt_out) cfg.out_dir = *opt_out;
            if (allow_large) cfg.allow_large = true;
            const auto out = polaract::run_sweep(cfg);
            for (const auto& f : out.csv_files) std::cout << f << '\n';
            std::cout << out.summary_file << '\n';
        } else if (ev->parsed()) {
            const auto model = make_channel(ev_channel, ev_p, ev_p2, ev_d);
            std::cout << polaract::cmd_evolve(model, ev_k, ev_beta, ev_mode, ev_rate, ev_out,
                                              ev_allow_large)
                      << '\n';
        } else if (part->parsed()) {
            const auto amp = make_channel(pa_channel, pa_p, 0.0, 2);
            const auto phase = make_channel(pa_channel, pa_p2, 0.0, 2);
            const auto alignment = pa_alignment == "aligned"
                                       ? polaract::PhaseAlignment::Aligned
                                       : polaract::PhaseAlignment::Complement;
            if (pa_alignment != "aligned" && pa_alignment != "complement") {
                throw ConfigError("alignment must be complement or aligned");
            }
            const auto [csv, json] = polaract::cmd_partition(amp, phase, pa_k, pa_beta,
                                                             pa_selection, pa_value, alignment,
                                                             pa_out);
            std::cout << csv << '\n' << json << '\n';
        } else if (cap->parsed()) {
            std::cout << polaract::cmd_capacity(make_channel(ca_channel, ca_p, ca_p2, ca_d));
        } else if (sim->parsed()) {
            const auto model = make_channel(si_channel, si_p, 0.0, 2);
            std::cout << polaract::cmd_simulate(model, si_k, si_rate, si_trials, *si_seed,
                                                si_out);
        } else if (chk->parsed()) {
            std::cout << polaract::cmd_check_polaractivation(ck_c_sym, ck_c_low, ck_c_star);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
