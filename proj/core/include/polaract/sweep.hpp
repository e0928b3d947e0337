#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polaract/channels.hpp"
#include "polaract/evolution.hpp"
#include "polaract/privacy.hpp"

namespace polaract {

/// Invalid configuration (maps to process exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default and hard limits on the recursion level per sweep family.
inline constexpr int kDefaultEvolutionK = 20;
inline constexpr int kLargeEvolutionK = 22;
inline constexpr int kMaxDecodingK = 12;

/// Configuration for `sweep <experiment>` and the one-shot commands.
/// Loadable from a JSON file; command line flags override file values.
struct SweepConfig {
    std::string experiment;  // erasure|polarize|privacy|eve|fidelity-region|bler

    std::string channel = "bec";  // bec|bsc (erasure experiment implies erasure)
    double p = 0.2;               // base / amplitude / Bob parameter
    double p2 = 0.2;              // phase / Eve parameter where applicable
    int d = 2;                    // erasure input dimension

    std::vector<double> p_grid;   // erasure & eve sweeps
    std::vector<int> k_grid;      // polarize/privacy/bler sweeps
    double beta = 0.45;
    double epsilon = 1e-9;        // polarization counting cutoff
    std::string selection = "rate-capacity";  // rate-capacity|threshold|epsilon
    std::string alignment = "complement";     // complement|aligned

    double rate = 0.45;           // decoding rate for bler
    std::uint64_t trials = 10000;
    std::optional<std::uint64_t> seed;  // mandatory for stochastic experiments

    std::string out_dir = ".";
    bool allow_large = false;

    static SweepConfig from_json_text(const std::string& text);
    /// Throws ConfigError on empty grids, out-of-range parameters, missing
    /// seed for stochastic experiments, or k beyond the (possibly
    /// --allow-large extended) caps.
    void validate() const;
};

struct SweepOutput {
    std::vector<std::string> csv_files;
    std::string summary_file;
};

/// Runs the configured experiment and emits its CSV files plus summary.json
/// into config.out_dir. Reruns with an identical config are byte-identical.
SweepOutput run_sweep(const SweepConfig& config);

// ---- one-shot commands backing the CLI verbs ----------------------------

/// Writes a reliability profile CSV (columns index,z,good) and returns its
/// path. mode: "threshold" or "rate-target" (with rate).
std::string cmd_evolve(const ChannelModel& model, int k, double beta,
                       const std::string& mode, double rate,
                       const std::string& out_dir, bool allow_large);

/// Writes the per-index partition CSV (columns index,cell) and a summary
/// JSON with cell counts and rates; returns {csv_path, json_path}.
std::pair<std::string, std::string> cmd_partition(const ChannelModel& amplitude,
                                                  const ChannelModel& phase,
                                                  int k, double beta,
                                                  const std::string& selection,
                                                  double rate_or_eps,
                                                  PhaseAlignment alignment,
                                                  const std::string& out_dir);

/// Capacity figures of a channel as a JSON object (text).
std::string cmd_capacity(const ChannelModel& model);

/// Runs simulate_bler, writes simreport.json + one-row bler CSV, returns the
/// report JSON text.
std::string cmd_simulate(const ChannelModel& model, int k, double rate,
                         std::uint64_t trials, std::uint64_t seed,
                         const std::string& out_dir);

/// Polaractivation status as a JSON object (text).
std::string cmd_check_polaractivation(double c_sym, double c_low, double c_sym_star);

}  // namespace polaract
