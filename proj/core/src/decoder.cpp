#include "polaract/decoder.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "polaract/csv.hpp"
#include "polaract/kernel.hpp"

namespace polaract {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double saturate(double v) {
    if (std::isnan(v)) return 0.0;
    if (std::isinf(v)) return v;  // symbolic certainty survives
    return std::clamp(v, -kLlrSaturation, kLlrSaturation);
}

}  // namespace

double llr_combine_bad(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return 0.0;
    const bool ia = std::isinf(a), ib = std::isinf(b);
    if (ia && ib) {
        // Two certainties: the XOR is certain, with the product sign.
        return std::signbit(a) == std::signbit(b) ? kInf : -kInf;
    }
    if (ia) return std::signbit(a) ? saturate(-b) : saturate(b);
    if (ib) return std::signbit(b) ? saturate(-a) : saturate(a);
    // ln((1 + e^{a+b}) / (e^a + e^b)), each log evaluated in stable form.
    const double s = a + b;
    const double num = std::max(s, 0.0) + std::log1p(std::exp(-std::fabs(s)));
    const double den = std::max(a, b) + std::log1p(std::exp(-std::fabs(a - b)));
    return saturate(num - den);
}

double llr_combine_good(double a, double b, int u1) {
    const double v = u1 == 0 ? a + b : b - a;
    return saturate(v);  // inf - inf conflicts become NaN -> 0 (uninformative)
}

namespace {

void require_lr(double l, const char* what) {
    if (std::isnan(l) || l < 0.0) {
        throw std::domain_error(std::string(what) + ": likelihood ratios are nonnegative");
    }
}

}  // namespace

double lr_combine_bad(double l1, double l2) {
    require_lr(l1, "lr_combine_bad");
    require_lr(l2, "lr_combine_bad");
    return std::exp(llr_combine_bad(std::log(l1), std::log(l2)));
}

double lr_combine_good(double l1, double l2, int u1) {
    require_lr(l1, "lr_combine_good");
    require_lr(l2, "lr_combine_good");
    if (u1 != 0 && u1 != 1) throw std::domain_error("lr_combine_good: u1 must be 0 or 1");
    return std::exp(llr_combine_good(std::log(l1), std::log(l2), u1));
}

std::size_t PolarCode::info_length() const {
    std::size_t l = 0;
    for (std::uint8_t f : frozen_mask) l += f == 0;
    return l;
}

std::vector<std::uint32_t> PolarCode::info_set() const {
    std::vector<std::uint32_t> info;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!frozen_mask[i]) info.push_back(i);
    }
    return info;
}

PolarCode PolarCode::from_info_set(int k, std::span<const std::uint32_t> info) {
    PolarCode code;
    code.k = k;
    code.n = std::size_t{1} << k;
    code.frozen_mask.assign(code.n, 1);
    code.frozen_values.assign(code.n, 0);
    for (std::uint32_t i : info) {
        if (i >= code.n) throw std::out_of_range("PolarCode: info index out of range");
        code.frozen_mask[i] = 0;
    }
    return code;
}

PolarCode PolarCode::rate_target(const ReliabilityProfile& profile, double rate) {
    const auto sel = select_indices(profile, RateTarget{rate});
    return from_info_set(profile.k, sel.good);
}

ScDecoder::ScDecoder(PolarCode code) : code_(std::move(code)) {
    const std::size_t n = code_.n;
    soft_.assign(static_cast<std::size_t>(code_.k + 1) * n, 0.0);
    hard_.assign(static_cast<std::size_t>(code_.k + 1) * n, 0);
    u_hat_.assign(n, 0);
}

void ScDecoder::recurse(int depth, std::size_t base, std::size_t m) {
    const std::size_t n = code_.n;
    double* soft = soft_.data() + static_cast<std::size_t>(depth) * n + base;

    if (m == 1) {
        const double lam = *soft;
        std::uint8_t bit;
        if (code_.frozen_mask[base]) {
            bit = code_.frozen_values[base];
        } else {
            bit = lam < 0.0 ? 1 : 0;  // decide 0 iff L >= 1; NaN ties to 0
        }
        if (trace_) (*trace_)[base] = lam;
        u_hat_[base] = bit;
        hard_[static_cast<std::size_t>(depth) * n + base] = bit;
        return;
    }

    const std::size_t h = m / 2;
    double* child = soft_.data() + static_cast<std::size_t>(depth + 1) * n + base;
    std::uint8_t* c1 = hard_.data() + static_cast<std::size_t>(depth + 1) * n + base;
    std::uint8_t* c2 = c1 + h;

    for (std::size_t j = 0; j < h; ++j) {
        child[j] = llr_combine_bad(soft[2 * j], soft[2 * j + 1]);
    }
    recurse(depth + 1, base, h);

    for (std::size_t j = 0; j < h; ++j) {
        child[h + j] = llr_combine_good(soft[2 * j], soft[2 * j + 1], c1[j]);
    }
    recurse(depth + 1, base + h, h);

    std::uint8_t* out = hard_.data() + static_cast<std::size_t>(depth) * n + base;
    for (std::size_t j = 0; j < h; ++j) {
        out[2 * j] = c1[j] ^ c2[j];
        out[2 * j + 1] = c2[j];
    }
}

ScResult ScDecoder::decode(const ChannelObservation& obs) {
    if (obs.lr.size() != code_.n) {
        throw std::invalid_argument("ScDecoder: observation length != n");
    }
    for (std::size_t i = 0; i < code_.n; ++i) {
        require_lr(obs.lr[i], "ScDecoder");
        soft_[i] = std::log(obs.lr[i]);
    }
    recurse(0, 0, code_.n);

    ScResult result;
    result.codeword.assign(hard_.begin(), hard_.begin() + static_cast<std::ptrdiff_t>(code_.n));
    result.message.reserve(code_.info_length());
    for (std::size_t i = 0; i < code_.n; ++i) {
        if (!code_.frozen_mask[i]) result.message.push_back(u_hat_[i]);
    }
    return result;
}

ScResult ScDecoder::decode_traced(const ChannelObservation& obs,
                                  std::vector<double>& decision_llrs) {
    decision_llrs.assign(code_.n, 0.0);
    trace_ = &decision_llrs;
    auto result = decode(obs);
    trace_ = nullptr;
    return result;
}

ScResult sc_decode(const PolarCode& code, const ChannelObservation& obs) {
    ScDecoder decoder(code);
    return decoder.decode(obs);
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64_next(s);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix64(seed + mix64(trial + 1))) {}

std::uint64_t TrialRng::next_u64() { return splitmix64_next(state_); }

double TrialRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool TrialRng::bernoulli(double p) { return uniform() < p; }

int TrialRng::bit() { return static_cast<int>(next_u64() >> 63); }

SimReport simulate_bler(const PolarCode& code,
                        const ChannelModel& model,
                        std::uint64_t trials,
                        std::uint64_t seed) {
    const auto* bec = std::get_if<Bec>(&model.kind());
    const auto* bsc = std::get_if<Bsc>(&model.kind());
    if (!bec && !bsc) {
        throw std::invalid_argument("simulate_bler: only BEC and BSC are supported");
    }
    if (trials < 1) throw std::invalid_argument("simulate_bler: trials must be >= 1");
    const double p = bec ? bec->p : bsc->p;

    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = code.n;
    const auto info = code.info_set();

    const auto profile = evolve(channel_reliability_seed(model), code.k);
    double union_bound = 0.0;
    for (std::uint32_t i : info) union_bound += profile.z[i];

    ScDecoder decoder(code);
    ChannelObservation obs;
    obs.lr.assign(n, 1.0);
    std::vector<std::uint8_t> u(n), message(info.size());
    const double lr0 = bsc ? (1.0 - p) / p : 0.0;
    const double lr1 = bsc ? p / (1.0 - p) : 0.0;

    std::uint64_t errors = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, t);
        std::fill(u.begin(), u.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (code.frozen_mask[j]) u[j] = code.frozen_values[j];
        }
        for (std::size_t m = 0; m < info.size(); ++m) {
            message[m] = static_cast<std::uint8_t>(rng.bit());
            u[info[m]] = message[m];
        }
        std::vector<std::uint8_t> x = u;
        polar_encode_inplace(x);

        if (bec) {
            for (std::size_t j = 0; j < n; ++j) {
                obs.lr[j] = rng.bernoulli(p) ? 1.0 : (x[j] == 0 ? kInf : 0.0);
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint8_t y = x[j] ^ static_cast<std::uint8_t>(rng.bernoulli(p));
                obs.lr[j] = y == 0 ? lr0 : lr1;
            }
        }

        const auto res = decoder.decode(obs);
        if (!std::equal(res.message.begin(), res.message.end(), message.begin())) {
            ++errors;
        }
    }

    SimReport report;
    report.k = code.k;
    report.n = n;
    report.rate = static_cast<double>(info.size()) / static_cast<double>(n);
    report.channel = model.name();
    report.channel_param = p;
    report.trials = trials;
    report.block_errors = errors;
    report.bler = static_cast<double>(errors) / static_cast<double>(trials);
    report.union_bound = union_bound;
    report.seed = seed;
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string SimReport::to_json() const {
    std::ostringstream out;
    out << "{\n"
        << "  \"k\": " << k << ",\n"
        << "  \"n\": " << n << ",\n"
        << "  \"rate\": " << format_double(rate) << ",\n"
        << "  \"channel\": \"" << channel << "\",\n"
        << "  \"p\": " << format_double(channel_param) << ",\n"
        << "  \"trials\": " << trials << ",\n"
        << "  \"block_errors\": " << block_errors << ",\n"
        << "  \"bler\": " << format_double(bler) << ",\n"
        << "  \"union_bound\": " << format_double(union_bound) << ",\n"
        << "  \"seed\": " << seed << "\n"
        << "}\n";
    return out.str();
}

std::string SimReport::csv_header() {
    return "n,rate,channel,p,trials,errors,bler,union_bound,seed";
}

std::string SimReport::csv_row() const {
    std::ostringstream out;
    out << n << ',' << format_double(rate) << ',' << channel << ','
        << format_double(channel_param) << ',' << trials << ',' << block_errors << ','
        << format_double(bler) << ',' << format_double(union_bound) << ',' << seed;
    return out.str();
}

}  // namespace polaract
