#include "polaract/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polaract {

namespace {

std::vector<std::uint8_t> membership_mask(std::span<const std::uint32_t> indices, std::size_t n,
                                          const char* what) {
    std::vector<std::uint8_t> mask(n, 0);
    for (std::uint32_t i : indices) {
        if (i >= n) throw std::out_of_range(std::string(what) + ": index out of range");
        mask[i] = 1;
    }
    return mask;
}

}  // namespace

std::vector<std::uint32_t> IndexPartition::classical() const {
    std::vector<std::uint32_t> c;
    c.reserve(p1.size() + s_in.size());
    std::merge(p1.begin(), p1.end(), s_in.begin(), s_in.end(), std::back_inserter(c));
    return c;
}

IndexPartition partition_indices(std::span<const std::uint32_t> good_amp,
                         std::span<const std::uint32_t> good_phase,
                         std::size_t n) {
    const auto amp = membership_mask(good_amp, n, "partition: good_amp");
    const auto phase = membership_mask(good_phase, n, "partition: good_phase");

    IndexPartition part;
    part.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (amp[i] && phase[i]) part.s_in.push_back(i);
        else if (amp[i]) part.p1.push_back(i);
        else if (phase[i]) part.p2.push_back(i);
        else part.b.push_back(i);
    }
    return part;
}

IndexPartition partition_from_good_sets(std::span<const std::uint32_t> good_amp,
                                        std::span<const std::uint32_t> good_phase,
                                        std::size_t n,
                                        PhaseAlignment alignment) {
    if (alignment == PhaseAlignment::Aligned) {
        return partition_indices(good_amp, good_phase, n);
    }
    std::vector<std::uint32_t> complemented;
    complemented.reserve(good_phase.size());
    for (std::uint32_t i : good_phase) {
        if (i >= n) throw std::out_of_range("partition_from_good_sets: phase index out of range");
        complemented.push_back(static_cast<std::uint32_t>(n - 1) - i);
    }
    return partition_indices(good_amp, complemented, n);
}

IndexPartition partition_from_profiles(const ReliabilityProfile& amplitude,
                                       const ReliabilityProfile& phase,
                                       const SelectionMode& mode,
                                       PhaseAlignment alignment) {
    if (amplitude.n != phase.n) {
        throw std::invalid_argument("partition_from_profiles: profiles must share n");
    }
    const auto sel_amp = select_indices(amplitude, mode);
    const auto sel_phase = select_indices(phase, mode);
    return partition_from_good_sets(sel_amp.good, sel_phase.good, amplitude.n, alignment);
}

Degradedness degradedness(double p_bob, double p_eve) {
    if (!(p_bob >= 0.0 && p_bob <= 1.0) || !(p_eve >= 0.0 && p_eve <= 1.0)) {
        throw std::domain_error("degradedness: probabilities outside [0,1]");
    }
    // Equality counts as degraded by convention.
    return p_eve >= p_bob ? Degradedness::Degraded : Degradedness::NonDegraded;
}

double private_rate(const IndexPartition& part, Degradedness mode) {
    const double n = static_cast<double>(part.n);
    if (mode == Degradedness::Degraded) {
        return static_cast<double>(part.s_in.size()) / n;
    }
    const double diff =
        static_cast<double>(part.s_in.size()) - static_cast<double>(part.b.size());
    return std::max(0.0, diff / n);
}

double inclusion_exclusion_rate(std::size_t g_amp, std::size_t g_phase, std::size_t n) {
    if (g_amp > n || g_phase > n) {
        throw std::invalid_argument("inclusion_exclusion_rate: count exceeds n");
    }
    const double total = static_cast<double>(g_amp) + static_cast<double>(g_phase);
    return std::max(0.0, total / static_cast<double>(n) - 1.0);
}

PolaractivationStatus polaractivation_check(double c_sym, double c_low, double c_sym_star) {
    if (!(c_sym >= 0.0) || !(c_sym <= c_sym_star)) {
        throw std::domain_error("polaractivation_check: need 0 <= c_sym <= c_sym_star");
    }
    if (!(c_low >= 0.0)) {
        throw std::domain_error("polaractivation_check: c_low must be >= 0");
    }
    PolaractivationStatus st;
    st.c_sym = c_sym;
    st.c_low = c_low;
    st.c_sym_star = c_sym_star;
    st.activatable = c_low <= c_sym_star;
    st.private_capable = c_sym >= c_low;
    st.delta_min = std::max(0.0, c_low - c_sym);
    st.delta_max = c_sym_star - c_sym;
    return st;
}

WiretapSets wiretap_sets(const ReliabilityProfile& bob,
                         const ReliabilityProfile& eve,
                         double beta) {
    if (bob.n != eve.n) {
        throw std::invalid_argument("wiretap_sets: profiles must share n");
    }
    if (!(beta > 0.0 && beta < 0.5)) {
        throw std::domain_error("wiretap_sets: beta must lie in (0, 0.5)");
    }
    const std::size_t n = bob.n;
    const double cutoff = threshold_cutoff(n, beta);

    WiretapSets sets;
    sets.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        const bool bob_good = cutoff > 0.0 ? bob.z[i] < cutoff : bob.z[i] == 0.0;
        const bool eve_bad = eve.z[i] >= 1.0 - cutoff;
        if (bob_good && eve_bad) sets.s_secret.push_back(i);
        else if (bob_good) sets.s_bob_only.push_back(i);
        else if (!eve_bad) sets.s_eve_risky.push_back(i);
        else sets.s_useless.push_back(i);
    }
    return sets;
}

double c_low_frontier_heuristic(double f_z, double f_x) {
    if (!(f_z >= 0.0 && f_z <= 1.0) || !(f_x >= 0.0 && f_x <= 1.0)) {
        throw std::domain_error("c_low_frontier_heuristic: fidelities outside [0,1]");
    }
    const double sum = f_z + f_x;
    if (sum == 0.0) {
        return csym_lower(0.5, 0.5);  // = 2 log2(4/3) = 0.83...
    }
    return csym_lower(f_z / sum, f_x / sum);
}

}  // namespace polaract
