#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "polaract/channels.hpp"

namespace polaract {

inline constexpr int kMaxEvolveLevel = 25;
inline constexpr int kMaxExactSynthesisLevel = 3;
/// z*z below this is clamped to exactly zero (semantically: a perfect
/// channel) and counted in ReliabilityProfile::underflow_clamps.
inline constexpr double kUnderflowClamp = 1e-300;

/// Per-index reliability parameters (Bhattacharyya / sqrt-fidelity) of the
/// 2^k synthesized channels, in natural index order: index bit (MSB first)
/// selects the branch at each recursion level, 0 = minus (worse), 1 = plus.
struct ReliabilityProfile {
    int k = 0;
    std::size_t n = 1;
    double seed = 0.0;  // base-channel parameter the recursion started from
    double beta = 0.45; // thresholding exponent, 0 < beta < 0.5
    std::vector<double> z;
    std::size_t underflow_clamps = 0;

    /// Compensated mean of z; equals seed to within ~1e-15 because each
    /// split preserves it: (z_minus + z_plus)/2 = z.
    double mean() const;
};

/// Applies z_minus = 2z - z^2, z_plus = z^2 level by level, k times.
ReliabilityProfile evolve(double seed, int k, double beta = 0.45);

struct Threshold {};              // good iff z_i < 2^(-n^beta)
struct RateTarget { double rate; };  // good = floor(rate*n) smallest z_i

using SelectionMode = std::variant<Threshold, RateTarget>;

struct IndexSelection {
    std::vector<std::uint32_t> good;  // sorted ascending
    std::vector<std::uint32_t> bad;   // complement, sorted ascending
    std::string mode;                 // "threshold" or "rate-target"
};

/// The fidelity threshold 2^(-n^beta). Underflows to 0 for large n*beta, in
/// which case only exactly-zero z qualify as good.
double threshold_cutoff(std::size_t n, double beta);

/// Threshold mode: good = {i : z_i < 2^(-n^beta)}.
/// Rate-target mode: the floor(rate*n) smallest z_i, ties to lower index.
IndexSelection select_indices(const ReliabilityProfile& profile, const SelectionMode& mode);

/// Convenience: indices with z_i < eps (not one of the two contract modes;
/// used for polarization-fraction counting).
IndexSelection select_below(const ReliabilityProfile& profile, double eps);

struct SynthesizedChannel {
    double mutual_information;  // bits, uniform input
    double bhattacharyya;
};

struct SynthesizedChannelTable {
    int k = 0;
    std::vector<SynthesizedChannel> channels;  // natural index order
};

/// Exact enumeration of the 2^k-fold synthesized channels of a finite-output
/// model (BEC or BSC), k <= 3. Index convention matches evolve().
SynthesizedChannelTable synthesize_exact(const ChannelModel& model, int k);

struct ChainRule {
    double i_minus;
    double i_plus;
    double i_base;
};

/// k = 1 synthesized mutual informations and the base capacity. Satisfies
/// i_minus + i_plus = 2 i_base and i_minus <= i_base <= i_plus.
ChainRule chain_rule_check(const ChannelModel& model);

}  // namespace polaract
