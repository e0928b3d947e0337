#include "polaract/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polaract/kernel.hpp"

namespace polaract {

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::domain_error(std::string(what) + " outside [0,1]");
    }
}

}  // namespace

double ReliabilityProfile::mean() const {
    // Kahan summation; the mean must track the seed to ~1e-15 even at
    // n = 2^25.
    double sum = 0.0;
    double carry = 0.0;
    for (double v : z) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(n);
}

ReliabilityProfile evolve(double seed, int k, double beta) {
    require_unit_interval(seed, "evolve: seed");
    if (k < 0) throw std::domain_error("evolve: k must be >= 0");
    if (k > kMaxEvolveLevel) {
        throw std::length_error("evolve: k exceeds the supported memory budget (25)");
    }
    if (!(beta > 0.0 && beta < 0.5)) {
        throw std::domain_error("evolve: beta must lie in (0, 0.5)");
    }

    ReliabilityProfile profile;
    profile.k = k;
    profile.n = std::size_t{1} << k;
    profile.seed = seed;
    profile.beta = beta;
    profile.z.assign(profile.n, 0.0);
    profile.z[0] = seed;

    // Expand back-to-front so each level doubles in place. Index bit order:
    // MSB = first level, 0-bit = minus branch.
    for (int level = 0; level < k; ++level) {
        const std::size_t m = std::size_t{1} << level;
        for (std::size_t i = m; i-- > 0;) {
            const double v = profile.z[i];
            double plus = v * v;
            if (plus < kUnderflowClamp && v > 0.0) {
                plus = 0.0;
                ++profile.underflow_clamps;
            }
            profile.z[2 * i] = v * (2.0 - v);
            profile.z[2 * i + 1] = plus;
        }
    }
    return profile;
}

double threshold_cutoff(std::size_t n, double beta) {
    return std::exp2(-std::pow(static_cast<double>(n), beta));
}

IndexSelection select_indices(const ReliabilityProfile& profile, const SelectionMode& mode) {
    IndexSelection sel;
    const std::size_t n = profile.n;

    if (std::holds_alternative<Threshold>(mode)) {
        if (!(profile.beta > 0.0 && profile.beta < 0.5)) {
            throw std::domain_error("select_indices: threshold mode needs 0 < beta < 0.5");
        }
        const double cutoff = threshold_cutoff(n, profile.beta);
        sel.mode = "threshold";
        for (std::uint32_t i = 0; i < n; ++i) {
            // When the cutoff itself underflows only exactly-zero (clamped,
            // i.e. perfect) channels qualify.
            const bool good = cutoff > 0.0 ? profile.z[i] < cutoff : profile.z[i] == 0.0;
            (good ? sel.good : sel.bad).push_back(i);
        }
        return sel;
    }

    const auto& target = std::get<RateTarget>(mode);
    require_unit_interval(target.rate, "select_indices: rate");
    sel.mode = "rate-target";
    const std::size_t l = static_cast<std::size_t>(target.rate * static_cast<double>(n));

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (profile.z[a] != profile.z[b]) return profile.z[a] < profile.z[b];
        return a < b;  // tie-break: lower index wins
    });
    std::vector<std::uint8_t> is_good(n, 0);
    for (std::size_t r = 0; r < l; ++r) is_good[order[r]] = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        (is_good[i] ? sel.good : sel.bad).push_back(i);
    }
    return sel;
}

IndexSelection select_below(const ReliabilityProfile& profile, double eps) {
    IndexSelection sel;
    sel.mode = "epsilon";
    for (std::uint32_t i = 0; i < profile.n; ++i) {
        (profile.z[i] < eps ? sel.good : sel.bad).push_back(i);
    }
    return sel;
}

namespace {

// Base channel as rows of (W(y|0), W(y|1)) over a finite output alphabet.
std::vector<std::array<double, 2>> base_rows(const ChannelModel& model) {
    if (const auto* bec = std::get_if<Bec>(&model.kind())) {
        const double p = bec->p;
        return {{1.0 - p, 0.0}, {0.0, 1.0 - p}, {p, p}};  // 0, 1, erasure
    }
    if (const auto* bsc = std::get_if<Bsc>(&model.kind())) {
        const double p = bsc->p;
        return {{1.0 - p, p}, {p, 1.0 - p}};
    }
    throw std::invalid_argument("synthesize_exact: only BEC and BSC have finite outputs");
}

double mutual_information_rows(const std::vector<std::array<double, 2>>& rows) {
    double info = 0.0;
    for (const auto& r : rows) {
        const double py = 0.5 * (r[0] + r[1]);
        for (double w : {r[0], r[1]}) {
            if (w > 0.0) info += 0.5 * w * std::log2(w / py);
        }
    }
    return info;
}

double bhattacharyya_rows(const std::vector<std::array<double, 2>>& rows) {
    double zsum = 0.0;
    for (const auto& r : rows) zsum += std::sqrt(r[0] * r[1]);
    return zsum;
}

}  // namespace

SynthesizedChannelTable synthesize_exact(const ChannelModel& model, int k) {
    if (k < 0 || k > kMaxExactSynthesisLevel) {
        throw std::length_error("synthesize_exact: exact enumeration capped at k = 3");
    }
    const auto w = base_rows(model);
    const std::size_t n = std::size_t{1} << k;
    const std::size_t sym = w.size();

    std::size_t y_count = 1;
    for (std::size_t j = 0; j < n; ++j) y_count *= sym;

    // Joint likelihoods J[u][y] = prod_j W(y_j | x_j) with x = G u. Input u
    // is packed with u_0 in the most significant bit so that u_{<=i} is a
    // plain prefix shift.
    const std::size_t u_count = std::size_t{1} << n;
    std::vector<double> joint(u_count * y_count);
    std::vector<std::uint8_t> ubits(n), xbits(n);
    for (std::size_t u = 0; u < u_count; ++u) {
        for (std::size_t j = 0; j < n; ++j) ubits[j] = (u >> (n - 1 - j)) & 1u;
        xbits = ubits;
        polar_encode_inplace(xbits);
        for (std::size_t y = 0; y < y_count; ++y) {
            std::size_t rem = y;
            double prod = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                prod *= w[rem % sym][xbits[j]];
                rem /= sym;
            }
            joint[u * y_count + y] = prod;
        }
    }

    SynthesizedChannelTable table;
    table.k = k;
    table.channels.resize(n);
    const double nuisance_weight = 1.0 / static_cast<double>(std::size_t{1} << (n - 1));

    std::vector<std::array<double, 2>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        // Output alphabet of channel i: (y, u_{<i}); nuisance bits u_{>i}
        // are summed out uniformly.
        const std::size_t prefix_count = std::size_t{1} << i;
        rows.assign(prefix_count * y_count, {0.0, 0.0});
        const std::size_t tail = n - 1 - i;
        for (std::size_t u = 0; u < u_count; ++u) {
            const std::size_t prefix = u >> (tail + 1);
            const std::size_t bit = (u >> tail) & 1u;
            for (std::size_t y = 0; y < y_count; ++y) {
                rows[prefix * y_count + y][bit] += joint[u * y_count + y] * nuisance_weight;
            }
        }
        table.channels[i].mutual_information = mutual_information_rows(rows);
        table.channels[i].bhattacharyya = bhattacharyya_rows(rows);
    }
    return table;
}

ChainRule chain_rule_check(const ChannelModel& model) {
    const auto table = synthesize_exact(model, 1);
    return {table.channels[0].mutual_information,
            table.channels[1].mutual_information,
            channel_capacity(model)};
}

}  // namespace polaract
