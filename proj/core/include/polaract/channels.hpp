#pragma once

#include <string>
#include <variant>

#include "polaract/density_matrix.hpp"

namespace polaract {

/// Which of the two induced classical subchannels of a Pauli channel is meant.
enum class Subchannel { Amplitude, Phase };

/// Quantum erasure channel with input dimension d (erased with probability p).
struct Erasure {
    double p;
    int d = 2;
};

/// Binary erasure channel.
struct Bec {
    double p;
};

/// Binary symmetric channel.
struct Bsc {
    double p;
};

/// The amplitude/phase subchannel pair induced by a Pauli channel.
/// Field naming: p_z is the amplitude-flip probability and p_x the
/// phase-flip probability. This inverts the usual X/Z convention but is
/// kept deliberately; see docs/NOTES in the README. `designated` selects
/// which subchannel the model stands for when a single binary channel is
/// required (reliability seed, capacity).
struct PauliSub {
    double p_z;
    double p_x;
    Subchannel designated = Subchannel::Amplitude;
};

/// Classical-quantum channel with binary input and qubit output states.
struct CqBinary {
    DensityMatrix2 sigma0;
    DensityMatrix2 sigma1;
};

/// A symmetric binary-input channel description. Validating wrapper over the
/// five supported model kinds; all probabilities must lie in [0,1], d >= 2.
class ChannelModel {
public:
    using Kind = std::variant<Erasure, Bec, Bsc, PauliSub, CqBinary>;

    ChannelModel(Erasure m);   // NOLINT(google-explicit-constructor)
    ChannelModel(Bec m);       // NOLINT
    ChannelModel(Bsc m);       // NOLINT
    ChannelModel(PauliSub m);  // NOLINT
    ChannelModel(CqBinary m);  // NOLINT

    const Kind& kind() const { return kind_; }
    /// Stable lowercase tag used in CSV/JSON output: "erasure", "bec",
    /// "bsc", "pauli-sub", "cq-binary".
    std::string name() const;

private:
    Kind kind_;
};

struct CapacityBounds {
    double lower;  // bits/use
    double upper;  // bits/use
};

struct ErasureCapacities {
    double c_sym_star;  // symmetric classical capacity, bits/use
    double p_private;   // private classical capacity, clamped at 0
};

struct SubchannelFidelities {
    double f_z;  // amplitude transmission fidelity
    double f_x;  // phase transmission fidelity
};

/// Binary entropy h2(p) in bits, 0*log(0) := 0.
double binary_entropy(double p);

/// Capacities of the d-dimensional erasure channel:
/// C* = (1-p) log2 d and P = max(0, 1-2p) log2 d.
ErasureCapacities erasure_capacities(double p, int d);

/// Symmetric (uniform-input) Holevo quantity of a binary cq channel:
/// S((s0+s1)/2) - S(s0)/2 - S(s1)/2, in bits. Always in [0,1].
double holevo_symmetric(const DensityMatrix2& sigma0, const DensityMatrix2& sigma1);

/// Uhlmann fidelity [Tr sqrt(sqrt(s) r sqrt(s))]^2, via the 2x2 closed form
/// tr(r s) + 2 sqrt(det r * det s). Symmetric in its arguments.
double fidelity(const DensityMatrix2& rho, const DensityMatrix2& sigma);

/// Applies the Pauli channel (1-px-py-pz) r + px XrX + py YrY + pz ZrZ.
/// Requires px + py + pz <= 1, each in [0,1].
DensityMatrix2 pauli_apply(double p_x, double p_y, double p_z, const DensityMatrix2& rho);

/// F_z = 2 sqrt(p_z (1-p_z)), F_x = 2 sqrt(p_x (1-p_x)).
SubchannelFidelities pauli_subchannel_fidelities(double p_z, double p_x);

/// Maps a general Pauli channel (p_x, p_y, p_z in the usual operator naming)
/// to its subchannel pair: amplitude flips are caused by X and Y, phase
/// flips by Z and Y. Note the result's field names follow PauliSub's
/// inverted convention (p_z = amplitude-flip).
PauliSub pauli_to_subchannels(double p_x, double p_y, double p_z);

/// Bhattacharyya/fidelity parameter of the base channel: the starting value
/// of the reliability recursion. p for erasure kinds, 2 sqrt(p(1-p)) for a
/// BSC, the designated subchannel fidelity for PauliSub, sqrt(F(s0,s1)) for
/// a cq pair.
double channel_reliability_seed(const ChannelModel& model);

/// Symmetric (uniform-input) capacity of the model in bits/use.
double channel_capacity(const ChannelModel& model);

/// Classical-capacity bounds in terms of the subchannel fidelities:
///   lower = log2(2/(1+F_z)) + log2(2/(1+F_x))
///   upper = sqrt(1+F_z^2) + sqrt(1+F_x^2)
CapacityBounds csym_bounds(double f_z, double f_x);
double csym_lower(double f_z, double f_x);
double csym_upper(double f_z, double f_x);

}  // namespace polaract
