#include "polaract/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

#include "polaract/csv.hpp"
#include "polaract/decoder.hpp"

namespace polaract {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kExperiments = {"erasure",   "polarize",       "privacy",
                                            "eve",       "fidelity-region", "bler"};

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

std::vector<double> default_unit_grid(double step) {
    std::vector<double> grid;
    const int steps = static_cast<int>(std::lround(1.0 / step));
    grid.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) * step);
    return grid;
}

ChannelModel make_binary_channel(const std::string& kind, double p) {
    if (kind == "bec") return ChannelModel(Bec{p});
    if (kind == "bsc") return ChannelModel(Bsc{p});
    throw ConfigError("channel must be bec or bsc, got '" + kind + "'");
}

std::vector<std::uint32_t> good_set(const ReliabilityProfile& profile,
                                    const ChannelModel& model,
                                    const SweepConfig& cfg) {
    if (cfg.selection == "rate-capacity") {
        return select_indices(profile, RateTarget{channel_capacity(model)}).good;
    }
    if (cfg.selection == "threshold") {
        return select_indices(profile, Threshold{}).good;
    }
    return select_below(profile, cfg.epsilon).good;
}

PhaseAlignment parse_alignment(const std::string& s) {
    if (s == "complement") return PhaseAlignment::Complement;
    if (s == "aligned") return PhaseAlignment::Aligned;
    throw ConfigError("alignment must be complement or aligned, got '" + s + "'");
}

ordered_json config_json(const SweepConfig& cfg) {
    ordered_json j;
    j["experiment"] = cfg.experiment;
    j["channel"] = cfg.channel;
    j["p"] = cfg.p;
    j["p2"] = cfg.p2;
    j["d"] = cfg.d;
    j["p_grid"] = cfg.p_grid;
    j["k_grid"] = cfg.k_grid;
    j["beta"] = cfg.beta;
    j["epsilon"] = cfg.epsilon;
    j["selection"] = cfg.selection;
    j["alignment"] = cfg.alignment;
    j["rate"] = cfg.rate;
    j["trials"] = cfg.trials;
    if (cfg.seed) j["seed"] = *cfg.seed;
    j["allow_large"] = cfg.allow_large;
    return j;
}

}  // namespace

SweepConfig SweepConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    SweepConfig cfg;
    try {
        if (j.contains("experiment")) cfg.experiment = j["experiment"].get<std::string>();
        if (j.contains("channel")) cfg.channel = j["channel"].get<std::string>();
        if (j.contains("p")) cfg.p = j["p"].get<double>();
        if (j.contains("p2")) cfg.p2 = j["p2"].get<double>();
        if (j.contains("d")) cfg.d = j["d"].get<int>();
        if (j.contains("p_grid")) cfg.p_grid = j["p_grid"].get<std::vector<double>>();
        if (j.contains("k_grid")) cfg.k_grid = j["k_grid"].get<std::vector<int>>();
        if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
        if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
        if (j.contains("selection")) cfg.selection = j["selection"].get<std::string>();
        if (j.contains("alignment")) cfg.alignment = j["alignment"].get<std::string>();
        if (j.contains("rate")) cfg.rate = j["rate"].get<double>();
        if (j.contains("trials")) cfg.trials = j["trials"].get<std::uint64_t>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("allow_large")) cfg.allow_large = j["allow_large"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    return cfg;
}

void SweepConfig::validate() const {
    if (!kExperiments.count(experiment)) {
        throw ConfigError("unknown experiment '" + experiment + "'");
    }
    if (!(p >= 0.0 && p <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0)) {
        throw ConfigError("channel probabilities must lie in [0,1]");
    }
    for (double v : p_grid) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("p_grid values must lie in [0,1]");
    }
    if (d < 2) throw ConfigError("erasure dimension d must be >= 2");
    if (!(beta > 0.0 && beta < 0.5)) throw ConfigError("beta must lie in (0, 0.5)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
    if (selection != "rate-capacity" && selection != "threshold" && selection != "epsilon") {
        throw ConfigError("selection must be rate-capacity, threshold or epsilon");
    }
    parse_alignment(alignment);
    if (!(rate >= 0.0 && rate <= 1.0)) throw ConfigError("rate must lie in [0,1]");

    const bool decoding = experiment == "bler";
    const int k_cap = decoding ? kMaxDecodingK
                               : (allow_large ? kLargeEvolutionK : kDefaultEvolutionK);
    for (int k : k_grid) {
        if (k < 1) throw ConfigError("k values must be >= 1");
        if (k > k_cap) {
            throw ConfigError("k = " + std::to_string(k) + " exceeds the cap of " +
                              std::to_string(k_cap) +
                              (decoding || allow_large ? "" : " (use --allow-large up to 22)"));
        }
    }
    if (decoding) {
        if (trials < 1) throw ConfigError("trials must be >= 1");
        if (!seed) throw ConfigError("--seed is mandatory for stochastic experiments");
    }
}

namespace {

std::string run_erasure(const SweepConfig& cfg, ordered_json& totals) {
    const auto grid = cfg.p_grid.empty() ? default_unit_grid(0.01) : cfg.p_grid;
    const std::string path = join_path(cfg.out_dir, "erasure.csv");
    CsvWriter csv(path);
    csv.meta({{"command", "sweep"},
              {"experiment", "erasure"},
              {"d", std::to_string(cfg.d)}});
    csv.header({"p", "c_sym_star", "p_private"});
    for (double p : grid) {
        const auto caps = erasure_capacities(p, cfg.d);
        csv.row({format_double(p), format_double(caps.c_sym_star), format_double(caps.p_private)});
    }
    totals["rows"] = grid.size();
    return path;
}

std::vector<std::string> run_polarize(const SweepConfig& cfg, ordered_json& totals) {
    auto k_grid = cfg.k_grid;
    if (k_grid.empty()) k_grid = {4, 8, 12, 16, 20};
    const auto model = make_binary_channel(cfg.channel, cfg.p);
    const double seed = channel_reliability_seed(model);
    const double capacity = channel_capacity(model);

    const std::string conv_path = join_path(cfg.out_dir, "polarize_convergence.csv");
    {
        CsvWriter csv(conv_path);
        csv.meta({{"command", "sweep"},
                  {"experiment", "polarize"},
                  {"channel", cfg.channel},
                  {"p", format_double(cfg.p)},
                  {"seed", format_double(seed)},
                  {"beta", format_double(cfg.beta)},
                  {"epsilon", format_double(cfg.epsilon)}});
        csv.header({"k", "n", "frac_z_below_eps", "frac_z_above_1m_eps",
                    "good_fraction_threshold", "capacity"});
        for (int k : k_grid) {
            const auto profile = evolve(seed, k, cfg.beta);
            const double n = static_cast<double>(profile.n);
            std::size_t lo = 0, hi = 0;
            for (double z : profile.z) {
                lo += z < cfg.epsilon;
                hi += z > 1.0 - cfg.epsilon;
            }
            const auto sel = select_indices(profile, Threshold{});
            csv.row({std::to_string(k), std::to_string(profile.n),
                     format_double(static_cast<double>(lo) / n),
                     format_double(static_cast<double>(hi) / n),
                     format_double(static_cast<double>(sel.good.size()) / n),
                     format_double(capacity)});
        }
    }

    const int k_max = *std::max_element(k_grid.begin(), k_grid.end());
    const std::string hist_path = join_path(cfg.out_dir, "polarize_histogram.csv");
    {
        // Fixed buckets spanning the doubly-exponential dynamic range of z.
        const std::vector<std::pair<double, double>> edges = {
            {0.0, 0.0},          // exactly zero (underflow-clamped)
            {0.0, 1e-100},       {1e-100, 1e-9}, {1e-9, 1e-3}, {1e-3, 0.1},
            {0.1, 0.5},          {0.5, 0.9},     {0.9, 1.0 - 1e-9},
            {1.0 - 1e-9, 1.0},   // near one
            {1.0, 1.0},          // exactly one (saturated)
        };
        const auto profile = evolve(seed, k_max, cfg.beta);
        std::vector<std::size_t> counts(edges.size(), 0);
        for (double z : profile.z) {
            if (z == 0.0) { ++counts[0]; continue; }
            if (z == 1.0) { ++counts[edges.size() - 1]; continue; }
            for (std::size_t b = 1; b + 1 < edges.size(); ++b) {
                if (z > edges[b].first && z <= edges[b].second) { ++counts[b]; break; }
            }
        }
        CsvWriter csv(hist_path);
        csv.meta({{"command", "sweep"},
                  {"experiment", "polarize"},
                  {"channel", cfg.channel},
                  {"p", format_double(cfg.p)},
                  {"k", std::to_string(k_max)}});
        csv.header({"bucket", "z_lo", "z_hi", "count"});
        for (std::size_t b = 0; b < edges.size(); ++b) {
            csv.row({std::to_string(b), format_double(edges[b].first),
                     format_double(edges[b].second), std::to_string(counts[b])});
        }
        totals["histogram_total"] =
            std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    }
    totals["rows"] = k_grid.size();
    return {conv_path, hist_path};
}

std::string run_privacy(const SweepConfig& cfg, ordered_json& totals) {
    auto k_grid = cfg.k_grid;
    if (k_grid.empty()) k_grid = {4, 6, 8, 10, 12, 14, 16, 18, 20};
    const auto amp_model = make_binary_channel(cfg.channel, cfg.p);
    const auto phase_model = make_binary_channel(cfg.channel, cfg.p2);
    const auto alignment = parse_alignment(cfg.alignment);

    const std::string path = join_path(cfg.out_dir, "privacy.csv");
    CsvWriter csv(path);
    csv.meta({{"command", "sweep"},
              {"experiment", "privacy"},
              {"channel", cfg.channel},
              {"p_amp", format_double(cfg.p)},
              {"p_phase", format_double(cfg.p2)},
              {"beta", format_double(cfg.beta)},
              {"selection", cfg.selection},
              {"alignment", cfg.alignment}});
    csv.header({"k", "n", "s_in_frac", "p1_frac", "p2_frac", "b_frac",
                "rate_degraded", "rate_non_degraded"});
    for (int k : k_grid) {
        const auto amp = evolve(channel_reliability_seed(amp_model), k, cfg.beta);
        const auto phase = evolve(channel_reliability_seed(phase_model), k, cfg.beta);
        const auto part = partition_from_good_sets(good_set(amp, amp_model, cfg),
                                                   good_set(phase, phase_model, cfg),
                                                   amp.n, alignment);
        const double n = static_cast<double>(part.n);
        csv.row({std::to_string(k), std::to_string(part.n),
                 format_double(static_cast<double>(part.s_in.size()) / n),
                 format_double(static_cast<double>(part.p1.size()) / n),
                 format_double(static_cast<double>(part.p2.size()) / n),
                 format_double(static_cast<double>(part.b.size()) / n),
                 format_double(private_rate(part, Degradedness::Degraded)),
                 format_double(private_rate(part, Degradedness::NonDegraded))});
    }
    totals["rows"] = k_grid.size();
    return path;
}

std::string run_eve(const SweepConfig& cfg, ordered_json& totals) {
    const auto grid = cfg.p_grid.empty() ? std::vector<double>{0.05, 0.1,  0.15, 0.2,  0.25,
                                                               0.3,  0.35, 0.4,  0.45, 0.5,
                                                               0.55, 0.6,  0.65, 0.7,  0.75,
                                                               0.8,  0.85, 0.9,  0.95}
                                         : cfg.p_grid;
    const int k = cfg.k_grid.empty() ? 16 : cfg.k_grid.front();
    const auto amp_model = make_binary_channel(cfg.channel, cfg.p);
    const auto amp = evolve(channel_reliability_seed(amp_model), k, cfg.beta);
    const auto amp_good = good_set(amp, amp_model, cfg);
    const auto alignment = parse_alignment(cfg.alignment);

    const std::string path = join_path(cfg.out_dir, "eve.csv");
    CsvWriter csv(path);
    csv.meta({{"command", "sweep"},
              {"experiment", "eve"},
              {"channel", cfg.channel},
              {"p_amp", format_double(cfg.p)},
              {"k", std::to_string(k)},
              {"beta", format_double(cfg.beta)},
              {"selection", cfg.selection},
              {"alignment", cfg.alignment}});
    // Eve's share of the codeword space is P1 (degraded) or P1|P2
    // (non-degraded); the private rate is plotted against it.
    csv.header({"p_phase", "eve_frac_degraded", "eve_frac_non_degraded",
                "rate_degraded", "rate_non_degraded"});
    for (double p_phase : grid) {
        const auto phase_model = make_binary_channel(cfg.channel, p_phase);
        const auto phase = evolve(channel_reliability_seed(phase_model), k, cfg.beta);
        const auto part = partition_from_good_sets(
            amp_good, good_set(phase, phase_model, cfg), amp.n, alignment);
        const double n = static_cast<double>(part.n);
        csv.row({format_double(p_phase),
                 format_double(static_cast<double>(part.p1.size()) / n),
                 format_double(static_cast<double>(part.p1.size() + part.p2.size()) / n),
                 format_double(private_rate(part, Degradedness::Degraded)),
                 format_double(private_rate(part, Degradedness::NonDegraded))});
    }
    totals["rows"] = grid.size();
    return path;
}

std::string run_fidelity_region(const SweepConfig& cfg, ordered_json& totals) {
    const auto axis = cfg.p_grid.empty() ? default_unit_grid(0.02) : cfg.p_grid;
    const std::string path = join_path(cfg.out_dir, "fidelity_region.csv");
    CsvWriter csv(path);
    csv.meta({{"command", "sweep"}, {"experiment", "fidelity-region"}});
    csv.header({"f_z", "f_x", "c_low", "c_up", "private_possible"});
    for (double fz : axis) {
        for (double fx : axis) {
            const auto bounds = csym_bounds(fz, fx);
            csv.row({format_double(fz), format_double(fx), format_double(bounds.lower),
                     format_double(bounds.upper), fz + fx < 1.0 ? "1" : "0"});
        }
    }
    totals["rows"] = axis.size() * axis.size();
    return path;
}

std::string run_bler(const SweepConfig& cfg, ordered_json& totals) {
    auto k_grid = cfg.k_grid;
    if (k_grid.empty()) k_grid = {6, 8, 10, 12};
    const auto model = make_binary_channel(cfg.channel, cfg.p);

    const std::string path = join_path(cfg.out_dir, "bler.csv");
    CsvWriter csv(path);
    csv.meta({{"command", "sweep"},
              {"experiment", "bler"},
              {"channel", cfg.channel},
              {"p", format_double(cfg.p)},
              {"rate", format_double(cfg.rate)},
              {"trials", std::to_string(cfg.trials)},
              {"seed", std::to_string(*cfg.seed)}});
    csv.header({"k", "n", "rate", "channel", "p", "trials", "errors", "bler",
                "union_bound", "seed"});
    std::uint64_t total_errors = 0;
    for (int k : k_grid) {
        const auto profile = evolve(channel_reliability_seed(model), k, cfg.beta);
        const auto code = PolarCode::rate_target(profile, cfg.rate);
        const auto report = simulate_bler(code, model, cfg.trials, *cfg.seed);
        total_errors += report.block_errors;
        csv.row({std::to_string(k), std::to_string(report.n), format_double(report.rate),
                 report.channel, format_double(report.channel_param),
                 std::to_string(report.trials), std::to_string(report.block_errors),
                 format_double(report.bler), format_double(report.union_bound),
                 std::to_string(report.seed)});
    }
    totals["rows"] = k_grid.size();
    totals["block_errors"] = total_errors;
    return path;
}

}  // namespace

SweepOutput run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    ensure_dir(cfg.out_dir);

    SweepOutput out;
    ordered_json totals;
    if (cfg.experiment == "erasure") {
        out.csv_files.push_back(run_erasure(cfg, totals));
    } else if (cfg.experiment == "polarize") {
        out.csv_files = run_polarize(cfg, totals);
    } else if (cfg.experiment == "privacy") {
        out.csv_files.push_back(run_privacy(cfg, totals));
    } else if (cfg.experiment == "eve") {
        out.csv_files.push_back(run_eve(cfg, totals));
    } else if (cfg.experiment == "fidelity-region") {
        out.csv_files.push_back(run_fidelity_region(cfg, totals));
    } else {
        out.csv_files.push_back(run_bler(cfg, totals));
    }

    ordered_json summary;
    summary["schema"] = "polaract-summary v1";
    summary["experiment"] = cfg.experiment;
    summary["config"] = config_json(cfg);
    ordered_json files = ordered_json::array();
    for (const auto& f : out.csv_files) {
        files.push_back(std::filesystem::path(f).filename().string());
    }
    summary["files"] = files;
    summary["totals"] = totals;

    out.summary_file = join_path(cfg.out_dir, "summary.json");
    write_text(out.summary_file, summary.dump(2) + "\n");
    return out;
}

// ---- one-shot commands ---------------------------------------------------

std::string cmd_evolve(const ChannelModel& model, int k, double beta,
                       const std::string& mode, double rate,
                       const std::string& out_dir, bool allow_large) {
    const int cap = allow_large ? kMaxEvolveLevel : kDefaultEvolutionK;
    if (k < 0 || k > cap) {
        throw ConfigError("evolve: k must lie in [0, " + std::to_string(cap) + "]");
    }
    SelectionMode sel_mode;
    if (mode == "threshold") {
        sel_mode = Threshold{};
    } else if (mode == "rate-target") {
        if (!(rate >= 0.0 && rate <= 1.0)) throw ConfigError("evolve: rate must lie in [0,1]");
        sel_mode = RateTarget{rate};
    } else {
        throw ConfigError("evolve: mode must be threshold or rate-target");
    }

    ensure_dir(out_dir);
    const auto profile = evolve(channel_reliability_seed(model), k, beta);
    const auto sel = select_indices(profile, sel_mode);
    std::vector<std::uint8_t> good(profile.n, 0);
    for (std::uint32_t i : sel.good) good[i] = 1;

    const std::string path = join_path(out_dir, "profile.csv");
    CsvWriter csv(path);
    std::vector<std::pair<std::string, std::string>> meta = {
        {"command", "evolve"},
        {"channel", model.name()},
        {"seed", format_double(profile.seed)},
        {"k", std::to_string(k)},
        {"beta", format_double(profile.beta)},
        {"mode", sel.mode}};
    if (sel.mode == "rate-target") meta.emplace_back("rate", format_double(rate));
    if (profile.underflow_clamps > 0) {
        meta.emplace_back("underflow_clamps", std::to_string(profile.underflow_clamps));
    }
    csv.meta(meta);
    csv.header({"index", "z", "good"});
    for (std::size_t i = 0; i < profile.n; ++i) {
        csv.row({std::to_string(i), format_double(profile.z[i]), good[i] ? "1" : "0"});
    }
    return path;
}

std::pair<std::string, std::string> cmd_partition(const ChannelModel& amplitude,
                                                  const ChannelModel& phase,
                                                  int k, double beta,
                                                  const std::string& selection,
                                                  double rate_or_eps,
                                                  PhaseAlignment alignment,
                                                  const std::string& out_dir) {
    if (k < 1 || k > kDefaultEvolutionK) {
        throw ConfigError("partition: k must lie in [1, 20]");
    }
    ensure_dir(out_dir);
    const auto amp_profile = evolve(channel_reliability_seed(amplitude), k, beta);
    const auto phase_profile = evolve(channel_reliability_seed(phase), k, beta);

    auto pick = [&](const ReliabilityProfile& profile,
                    const ChannelModel& model) -> std::vector<std::uint32_t> {
        if (selection == "rate-capacity") {
            return select_indices(profile, RateTarget{channel_capacity(model)}).good;
        }
        if (selection == "rate") {
            return select_indices(profile, RateTarget{rate_or_eps}).good;
        }
        if (selection == "threshold") {
            return select_indices(profile, Threshold{}).good;
        }
        if (selection == "epsilon") {
            return select_below(profile, rate_or_eps).good;
        }
        throw ConfigError("partition: selection must be rate-capacity, rate, threshold or epsilon");
    };
    const auto part = partition_from_good_sets(pick(amp_profile, amplitude),
                                               pick(phase_profile, phase),
                                               amp_profile.n, alignment);

    const std::string csv_path = join_path(out_dir, "partition.csv");
    {
        std::vector<std::string> cell(part.n);
        for (std::uint32_t i : part.s_in) cell[i] = "S_in";
        for (std::uint32_t i : part.p1) cell[i] = "P1";
        for (std::uint32_t i : part.p2) cell[i] = "P2";
        for (std::uint32_t i : part.b) cell[i] = "B";
        CsvWriter csv(csv_path);
        csv.meta({{"command", "partition"},
                  {"channel_amp", amplitude.name()},
                  {"channel_phase", phase.name()},
                  {"k", std::to_string(k)},
                  {"beta", format_double(beta)},
                  {"selection", selection},
                  {"alignment",
                   alignment == PhaseAlignment::Complement ? "complement" : "aligned"}});
        csv.header({"index", "cell"});
        for (std::size_t i = 0; i < part.n; ++i) {
            csv.row({std::to_string(i), cell[i]});
        }
    }

    ordered_json summary;
    summary["schema"] = "polaract-partition v1";
    summary["n"] = part.n;
    summary["k"] = k;
    ordered_json counts;
    counts["S_in"] = part.s_in.size();
    counts["P1"] = part.p1.size();
    counts["P2"] = part.p2.size();
    counts["B"] = part.b.size();
    summary["counts"] = counts;
    summary["s_bad"] = part.s_bad_size();
    ordered_json rates;
    rates["degraded"] = private_rate(part, Degradedness::Degraded);
    rates["non_degraded"] = private_rate(part, Degradedness::NonDegraded);
    rates["inclusion_exclusion"] = inclusion_exclusion_rate(
        part.s_in.size() + part.p1.size(), part.s_in.size() + part.p2.size(), part.n);
    summary["rates"] = rates;

    const std::string json_path = join_path(out_dir, "partition_summary.json");
    write_text(json_path, summary.dump(2) + "\n");
    return {csv_path, json_path};
}

std::string cmd_capacity(const ChannelModel& model) {
    ordered_json j;
    j["channel"] = model.name();
    struct Visitor {
        ordered_json& j;
        void operator()(const Erasure& m) const {
            j["p"] = m.p;
            j["d"] = m.d;
            const auto caps = erasure_capacities(m.p, m.d);
            j["c_sym_star"] = caps.c_sym_star;
            j["p_private"] = caps.p_private;
        }
        void operator()(const Bec& m) const { j["p"] = m.p; }
        void operator()(const Bsc& m) const { j["p"] = m.p; }
        void operator()(const PauliSub& m) const {
            j["p_z"] = m.p_z;
            j["p_x"] = m.p_x;
            j["designated"] = m.designated == Subchannel::Amplitude ? "amplitude" : "phase";
            const auto f = pauli_subchannel_fidelities(m.p_z, m.p_x);
            j["f_z"] = f.f_z;
            j["f_x"] = f.f_x;
            const auto bounds = csym_bounds(f.f_z, f.f_x);
            j["csym_lower"] = bounds.lower;
            j["csym_upper"] = bounds.upper;
            j["c_low_heuristic"] = c_low_frontier_heuristic(f.f_z, f.f_x);
        }
        void operator()(const CqBinary&) const {}
    };
    std::visit(Visitor{j}, model.kind());
    j["capacity"] = channel_capacity(model);
    j["reliability_seed"] = channel_reliability_seed(model);
    return j.dump(2) + "\n";
}

std::string cmd_simulate(const ChannelModel& model, int k, double rate,
                         std::uint64_t trials, std::uint64_t seed,
                         const std::string& out_dir) {
    if (k < 1 || k > kMaxDecodingK) {
        throw ConfigError("simulate: k must lie in [1, " + std::to_string(kMaxDecodingK) + "]");
    }
    if (!(rate >= 0.0 && rate <= 1.0)) throw ConfigError("simulate: rate must lie in [0,1]");
    if (trials < 1) throw ConfigError("simulate: trials must be >= 1");
    ensure_dir(out_dir);

    const auto profile = evolve(channel_reliability_seed(model), k);
    const auto code = PolarCode::rate_target(profile, rate);
    const auto report = simulate_bler(code, model, trials, seed);

    const std::string json_text = report.to_json();
    write_text(join_path(out_dir, "simreport.json"), json_text);
    write_text(join_path(out_dir, "simreport.csv"),
               SimReport::csv_header() + "\n" + report.csv_row() + "\n");
    return json_text;
}

std::string cmd_check_polaractivation(double c_sym, double c_low, double c_sym_star) {
    const auto st = polaractivation_check(c_sym, c_low, c_sym_star);
    ordered_json j;
    j["c_sym"] = st.c_sym;
    j["c_low"] = st.c_low;
    j["c_sym_star"] = st.c_sym_star;
    j["activatable"] = st.activatable;
    j["private_capable"] = st.private_capable;
    j["blocked"] = !st.private_capable;
    j["delta_min"] = st.delta_min;
    j["delta_max"] = st.delta_max;
    return j.dump(2) + "\n";
}

}  // namespace polaract
