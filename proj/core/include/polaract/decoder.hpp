#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polaract/channels.hpp"
#include "polaract/evolution.hpp"

namespace polaract {

/// Finite log-likelihood magnitudes saturate here; exact certainties coming
/// from erasure observations stay symbolic (+-inf).
inline constexpr double kLlrSaturation = 700.0;

/// Likelihood-ratio combiner for the worse (u1 unknown) branch:
/// (1 + l1*l2) / (l1 + l2), computed in the log domain. Certainty inputs
/// (0 or +inf) propagate by parity; no indeterminate output arises.
double lr_combine_bad(double l1, double l2);

/// Combiner for the better branch with u1 known at the decoder:
/// u1 = 0 -> l1*l2, u1 = 1 -> l2/l1. Conflicting certainties (0*inf, inf/inf,
/// 0/0) resolve to 1, i.e. uninformative.
double lr_combine_good(double l1, double l2, int u1);

/// Log-domain equivalents operating on lambda = ln L.
double llr_combine_bad(double a, double b);
double llr_combine_good(double a, double b, int u1);

/// A polar code: block length n = 2^k with a frozen mask and the publicly
/// known frozen values (all-zero unless stated otherwise).
struct PolarCode {
    int k = 0;
    std::size_t n = 1;
    std::vector<std::uint8_t> frozen_mask;    // 1 = frozen
    std::vector<std::uint8_t> frozen_values;  // used where frozen_mask is set

    std::size_t info_length() const;
    std::vector<std::uint32_t> info_set() const;  // non-frozen indices, ascending

    static PolarCode from_info_set(int k, std::span<const std::uint32_t> info);
    /// Freezes everything outside the rate-target good set of the profile.
    static PolarCode rate_target(const ReliabilityProfile& profile, double rate);
};

/// Per-position likelihood ratios L_i in [0, +inf]; +inf means "certainly 0",
/// 1 means erased/uninformative.
struct ChannelObservation {
    std::vector<double> lr;
};

struct ScResult {
    std::vector<std::uint8_t> message;   // info positions, ascending index order
    std::vector<std::uint8_t> codeword;  // re-encoded estimate, length n
};

/// Successive-cancellation decoder. Workspace is allocated once; decode()
/// may be called repeatedly and is O(n log n) per call. Decision rule:
/// an information bit is 0 iff its likelihood ratio is >= 1 (ties to 0).
class ScDecoder {
public:
    explicit ScDecoder(PolarCode code);

    const PolarCode& code() const { return code_; }

    ScResult decode(const ChannelObservation& obs);
    /// Also records the pre-decision log-likelihood ratio of every input
    /// index (frozen ones included) into decision_llrs.
    ScResult decode_traced(const ChannelObservation& obs, std::vector<double>& decision_llrs);

private:
    void recurse(int depth, std::size_t base, std::size_t m);

    PolarCode code_;
    std::vector<double> soft_;        // (k+1) stripes of n
    std::vector<std::uint8_t> hard_;  // (k+1) stripes of n
    std::vector<std::uint8_t> u_hat_;
    std::vector<double>* trace_ = nullptr;
};

/// One-shot convenience wrappers around ScDecoder.
ScResult sc_decode(const PolarCode& code, const ChannelObservation& obs);

/// Monte Carlo decoding statistics. wall_clock_seconds is informational and
/// deliberately excluded from the serialized forms so reruns with the same
/// seed are byte-identical.
struct SimReport {
    int k = 0;
    std::size_t n = 1;
    double rate = 0.0;
    std::string channel;
    double channel_param = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    double bler = 0.0;
    double union_bound = 0.0;  // sum of info-set z_i from the evolved profile
    std::uint64_t seed = 0;
    double wall_clock_seconds = 0.0;

    std::string to_json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

/// SplitMix64 step: the single named mixing primitive behind all stochastic
/// reproducibility in this library.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Deterministic per-trial substream: the state is seeded as
///   mix(seed + mix(trial_index + 1))
/// where mix is the SplitMix64 finalizer, so trials are independent of
/// execution order and worker count.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);
    std::uint64_t next_u64();
    /// Uniform in [0,1) with 53-bit resolution: (next >> 11) * 2^-53.
    double uniform();
    bool bernoulli(double p);
    int bit();

private:
    std::uint64_t state_;
};

/// Draws uniform messages, transmits through the channel (BEC or BSC),
/// decodes and counts block errors. Fully deterministic given the seed.
SimReport simulate_bler(const PolarCode& code,
                        const ChannelModel& model,
                        std::uint64_t trials,
                        std::uint64_t seed);

}  // namespace polaract
