#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polaract/evolution.hpp"

namespace polaract {

/// Codeword index sets over [n] built from the amplitude/phase good sets:
///   s_in = good_amp & good_phase   (usable for private transmission)
///   p1   = good_amp \ good_phase   (amplitude only)
///   p2   = good_phase \ good_amp   (phase only)
///   b    = neither                 (useless)
/// The four cells are pairwise disjoint and cover [n].
struct IndexPartition {
    std::size_t n = 0;
    std::vector<std::uint32_t> s_in;
    std::vector<std::uint32_t> p1;
    std::vector<std::uint32_t> p2;
    std::vector<std::uint32_t> b;

    /// C = p1 | s_in: everything usable for classical transmission.
    std::vector<std::uint32_t> classical() const;
    /// |S_bad| = n - |s_in|.
    std::size_t s_bad_size() const { return n - s_in.size(); }
};

/// Set arithmetic over two good sets; inputs need not be sorted but must
/// contain indices < n (out-of-range throws std::out_of_range).
IndexPartition partition_indices(std::span<const std::uint32_t> good_amp,
                                 std::span<const std::uint32_t> good_phase,
                                 std::size_t n);

/// How the phase polarization is aligned against the amplitude one.
/// Complement: the phase profile is read at the bitwise-complemented index
/// (plus/minus branch roles swapped), which drives |s_in|/n toward
/// C_amp + C_phase - 1. Aligned keeps the raw index for sensitivity studies.
enum class PhaseAlignment { Complement, Aligned };

IndexPartition partition_from_good_sets(std::span<const std::uint32_t> good_amp,
                                        std::span<const std::uint32_t> good_phase,
                                        std::size_t n,
                                        PhaseAlignment alignment);

/// Selects good sets from both profiles with the given mode, applies the
/// alignment convention and partitions. Profiles must share n.
IndexPartition partition_from_profiles(const ReliabilityProfile& amplitude,
                                       const ReliabilityProfile& phase,
                                       const SelectionMode& mode,
                                       PhaseAlignment alignment = PhaseAlignment::Complement);

enum class Degradedness { Degraded, NonDegraded };

/// Eve is degraded iff p_eve > p_bob; equality counts as degraded.
Degradedness degradedness(double p_bob, double p_eve);

/// Degraded: |s_in|/n. Non-degraded: max(0, (|s_in| - |b|)/n).
double private_rate(const IndexPartition& part, Degradedness mode);

/// max(0, (g_amp + g_phase)/n - 1).
double inclusion_exclusion_rate(std::size_t g_amp, std::size_t g_phase, std::size_t n);

struct PolaractivationStatus {
    double c_sym;       // current symmetric classical rate
    double c_low;       // critical lower bound
    double c_sym_star;  // peak symmetric classical capacity
    bool activatable;       // c_low <= c_sym_star
    bool private_capable;   // c_sym >= c_low (otherwise P_sym = 0, blocked)
    double delta_min;       // max(0, c_low - c_sym)
    double delta_max;       // c_sym_star - c_sym
};

/// Evaluates the polaractivation condition: whether raising the classical
/// rate by some delta in [delta_min, delta_max] can open the private domain.
/// Preconditions: 0 <= c_sym <= c_sym_star, c_low >= 0.
PolaractivationStatus polaractivation_check(double c_sym, double c_low, double c_sym_star);

/// The four wiretap cells keyed by (Bob good, Eve bad) at the 2^(-n^beta)
/// threshold: s_secret = good for Bob AND z_eve >= 1 - cutoff.
struct WiretapSets {
    std::size_t n = 0;
    std::vector<std::uint32_t> s_secret;    // Bob good, Eve bad
    std::vector<std::uint32_t> s_bob_only;  // Bob good, Eve not bad (leaks)
    std::vector<std::uint32_t> s_eve_risky; // Bob bad, Eve not bad
    std::vector<std::uint32_t> s_useless;   // Bob bad, Eve bad
};

WiretapSets wiretap_sets(const ReliabilityProfile& bob,
                         const ReliabilityProfile& eve,
                         double beta);

/// Default derivation of the critical bound c_low: the classical-capacity
/// lower bound evaluated where the ray through (f_z, f_x) crosses the
/// f_z + f_x = 1 frontier. A heuristic; c_low is otherwise a free input.
/// The degenerate ray (0,0) uses the symmetric frontier point (1/2, 1/2),
/// giving 2*log2(4/3) = 0.83.
double c_low_frontier_heuristic(double f_z, double f_x);

}  // namespace polaract
