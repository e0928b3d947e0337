#include "polaract/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace polaract {

namespace {

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error(std::string(what) + ": probability outside [0,1]");
    }
}

}  // namespace

ChannelModel::ChannelModel(Erasure m) : kind_(m) {
    require_probability(m.p, "Erasure");
    if (m.d < 2) throw std::domain_error("Erasure: input dimension must be >= 2");
}

ChannelModel::ChannelModel(Bec m) : kind_(m) { require_probability(m.p, "BEC"); }

ChannelModel::ChannelModel(Bsc m) : kind_(m) { require_probability(m.p, "BSC"); }

ChannelModel::ChannelModel(PauliSub m) : kind_(m) {
    require_probability(m.p_z, "PauliSub.p_z");
    require_probability(m.p_x, "PauliSub.p_x");
}

ChannelModel::ChannelModel(CqBinary m) : kind_(std::move(m)) {}

std::string ChannelModel::name() const {
    struct Visitor {
        std::string operator()(const Erasure&) const { return "erasure"; }
        std::string operator()(const Bec&) const { return "bec"; }
        std::string operator()(const Bsc&) const { return "bsc"; }
        std::string operator()(const PauliSub&) const { return "pauli-sub"; }
        std::string operator()(const CqBinary&) const { return "cq-binary"; }
    };
    return std::visit(Visitor{}, kind_);
}

double binary_entropy(double p) {
    require_probability(p, "binary_entropy");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

ErasureCapacities erasure_capacities(double p, int d) {
    require_probability(p, "erasure_capacities");
    if (d < 2) throw std::domain_error("erasure_capacities: d must be >= 2");
    const double logd = std::log2(static_cast<double>(d));
    return {(1.0 - p) * logd, std::max(0.0, 1.0 - 2.0 * p) * logd};
}

double holevo_symmetric(const DensityMatrix2& sigma0, const DensityMatrix2& sigma1) {
    const DensityMatrix2 avg((sigma0.at(0, 0) + sigma1.at(0, 0)) / 2.0,
                             (sigma0.at(0, 1) + sigma1.at(0, 1)) / 2.0,
                             (sigma0.at(1, 0) + sigma1.at(1, 0)) / 2.0,
                             (sigma0.at(1, 1) + sigma1.at(1, 1)) / 2.0);
    const double chi = entropy_bits(avg) - entropy_bits(sigma0) / 2.0 - entropy_bits(sigma1) / 2.0;
    // Concavity makes chi >= 0; rounding can leave a tiny negative residue.
    return std::min(std::max(chi, 0.0), 1.0);
}

double fidelity(const DensityMatrix2& rho, const DensityMatrix2& sigma) {
    // 2x2 closed form: tr(rho sigma) + 2 sqrt(det rho * det sigma).
    const double overlap = rho.at(0, 0).real() * sigma.at(0, 0).real() +
                           rho.at(1, 1).real() * sigma.at(1, 1).real() +
                           2.0 * (rho.at(0, 1) * std::conj(sigma.at(0, 1))).real();
    const double dets = std::max(rho.determinant(), 0.0) * std::max(sigma.determinant(), 0.0);
    const double f = overlap + 2.0 * std::sqrt(dets);
    return std::min(std::max(f, 0.0), 1.0);
}

DensityMatrix2 pauli_apply(double p_x, double p_y, double p_z, const DensityMatrix2& rho) {
    require_probability(p_x, "pauli_apply.p_x");
    require_probability(p_y, "pauli_apply.p_y");
    require_probability(p_z, "pauli_apply.p_z");
    if (p_x + p_y + p_z > 1.0 + 1e-12) {
        throw std::domain_error("pauli_apply: p_x + p_y + p_z > 1");
    }
    const auto a = rho.at(0, 0);
    const auto b = rho.at(0, 1);
    const auto d = rho.at(1, 1);
    // X and Y swap the diagonal; Y and Z flip the coherence sign and Y also
    // conjugates it.
    const auto m00 = (1.0 - p_x - p_y) * a + (p_x + p_y) * d;
    const auto m11 = (1.0 - p_x - p_y) * d + (p_x + p_y) * a;
    const auto m01 = (1.0 - p_x - p_y - 2.0 * p_z) * b + (p_x - p_y) * std::conj(b);
    return DensityMatrix2(m00, m01, std::conj(m01), m11);
}

SubchannelFidelities pauli_subchannel_fidelities(double p_z, double p_x) {
    require_probability(p_z, "pauli_subchannel_fidelities.p_z");
    require_probability(p_x, "pauli_subchannel_fidelities.p_x");
    return {2.0 * std::sqrt(p_z * (1.0 - p_z)), 2.0 * std::sqrt(p_x * (1.0 - p_x))};
}

PauliSub pauli_to_subchannels(double p_x, double p_y, double p_z) {
    require_probability(p_x, "pauli_to_subchannels.p_x");
    require_probability(p_y, "pauli_to_subchannels.p_y");
    require_probability(p_z, "pauli_to_subchannels.p_z");
    if (p_x + p_y + p_z > 1.0 + 1e-12) {
        throw std::domain_error("pauli_to_subchannels: p_x + p_y + p_z > 1");
    }
    return PauliSub{p_x + p_y, p_z + p_y, Subchannel::Amplitude};
}

double channel_reliability_seed(const ChannelModel& model) {
    struct Visitor {
        double operator()(const Erasure& m) const { return m.p; }
        double operator()(const Bec& m) const { return m.p; }
        double operator()(const Bsc& m) const { return 2.0 * std::sqrt(m.p * (1.0 - m.p)); }
        double operator()(const PauliSub& m) const {
            const auto f = pauli_subchannel_fidelities(m.p_z, m.p_x);
            return m.designated == Subchannel::Amplitude ? f.f_z : f.f_x;
        }
        double operator()(const CqBinary& m) const {
            return std::sqrt(fidelity(m.sigma0, m.sigma1));
        }
    };
    return std::visit(Visitor{}, model.kind());
}

double channel_capacity(const ChannelModel& model) {
    struct Visitor {
        double operator()(const Erasure& m) const { return erasure_capacities(m.p, m.d).c_sym_star; }
        double operator()(const Bec& m) const { return 1.0 - m.p; }
        double operator()(const Bsc& m) const { return 1.0 - binary_entropy(m.p); }
        double operator()(const PauliSub& m) const {
            // The designated subchannel is a BSC with the matching flip rate.
            const double q = m.designated == Subchannel::Amplitude ? m.p_z : m.p_x;
            return 1.0 - binary_entropy(q);
        }
        double operator()(const CqBinary& m) const { return holevo_symmetric(m.sigma0, m.sigma1); }
    };
    return std::visit(Visitor{}, model.kind());
}

double csym_lower(double f_z, double f_x) {
    require_probability(f_z, "csym_lower.f_z");
    require_probability(f_x, "csym_lower.f_x");
    return std::log2(2.0 / (1.0 + f_z)) + std::log2(2.0 / (1.0 + f_x));
}

double csym_upper(double f_z, double f_x) {
    require_probability(f_z, "csym_upper.f_z");
    require_probability(f_x, "csym_upper.f_x");
    return std::sqrt(1.0 + f_z * f_z) + std::sqrt(1.0 + f_x * f_x);
}

CapacityBounds csym_bounds(double f_z, double f_x) {
    return {csym_lower(f_z, f_x), csym_upper(f_z, f_x)};
}

}  // namespace polaract
