// Test-only oracles, kept independent of the implementation paths they check:
// eigendecomposition-based entropy/fidelity (Eigen), generic finite-channel
// information measures, literal coset enumeration for partial distances,
// exhaustive posterior computation and a maximum-likelihood erasure decoder.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "polaract/density_matrix.hpp"
#include "polaract/kernel.hpp"

namespace oracles {

using complexd = std::complex<double>;
using polaract::DensityMatrix2;

inline Eigen::Matrix2cd to_eigen(const DensityMatrix2& m) {
    Eigen::Matrix2cd out;
    out << m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1);
    return out;
}

// Entropy via an iterative eigensolver rather than the closed form.
inline double entropy_bits_eigen(const DensityMatrix2& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(to_eigen(rho));
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double lambda = solver.eigenvalues()[i];
        if (lambda > 1e-15) s -= lambda * std::log2(lambda);
    }
    return s;
}

template <typename Matrix>
Matrix matrix_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    auto lambda = solver.eigenvalues();
    for (int i = 0; i < lambda.size(); ++i) lambda[i] = std::sqrt(std::max(lambda[i], 0.0));
    return solver.eigenvectors() * lambda.asDiagonal() *
           solver.eigenvectors().adjoint();
}

// Uhlmann fidelity [tr sqrt(sqrt(s) r sqrt(s))]^2 by explicit matrix square
// roots; works for any Hermitian PSD pair of the same size.
template <typename Matrix>
double fidelity_eigen(const Matrix& rho, const Matrix& sigma) {
    const Matrix s_half = matrix_sqrt<Matrix>(sigma);
    const Matrix inner = s_half * rho * s_half;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(inner);
    double tr = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        tr += std::sqrt(std::max(solver.eigenvalues()[i], 0.0));
    }
    return tr * tr;
}

inline double fidelity_eigen2(const DensityMatrix2& rho, const DensityMatrix2& sigma) {
    return fidelity_eigen<Eigen::Matrix2cd>(to_eigen(rho), to_eigen(sigma));
}

inline Eigen::Matrix4cd kron2(const DensityMatrix2& a, const DensityMatrix2& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
    return out;
}

// Uniform random density matrix: direction uniform on the Bloch sphere,
// radius cube-root-distributed (uniform over the ball). Stays off the pure
// boundary, where the fidelity's square root has unbounded derivative and
// eigensolver-based oracles lose ~1e-8 of accuracy.
inline DensityMatrix2 random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    const double norm = std::sqrt(x * x + y * y + z * z);
    const double r = std::cbrt(unit(rng));
    if (norm == 0.0) return DensityMatrix2::maximally_mixed();
    return DensityMatrix2::from_bloch(r * x / norm, r * y / norm, r * z / norm);
}

inline DensityMatrix2 random_pure(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0.0) return DensityMatrix2::ket0();
    return DensityMatrix2::from_bloch(x / norm, y / norm, z / norm);
}

// Haar-ish random 2x2 unitary: [[a, b], [-conj(b), conj(a)]].
inline std::array<complexd, 4> random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double theta = std::asin(std::sqrt(unit(rng)));
    const complexd a = std::polar(std::cos(theta), angle(rng));
    const complexd b = std::polar(std::sin(theta), angle(rng));
    return {a, b, -std::conj(b), std::conj(a)};
}

inline DensityMatrix2 conjugate(const std::array<complexd, 4>& u, const DensityMatrix2& rho) {
    const complexd r00 = rho.at(0, 0), r01 = rho.at(0, 1), r10 = rho.at(1, 0), r11 = rho.at(1, 1);
    // U rho U^dagger, fully expanded.
    const complexd t00 = u[0] * r00 + u[1] * r10;
    const complexd t01 = u[0] * r01 + u[1] * r11;
    const complexd t10 = u[2] * r00 + u[3] * r10;
    const complexd t11 = u[2] * r01 + u[3] * r11;
    const complexd m00 = t00 * std::conj(u[0]) + t01 * std::conj(u[1]);
    const complexd m01 = t00 * std::conj(u[2]) + t01 * std::conj(u[3]);
    const complexd m10 = t10 * std::conj(u[0]) + t11 * std::conj(u[1]);
    const complexd m11 = t10 * std::conj(u[2]) + t11 * std::conj(u[3]);
    return DensityMatrix2(m00, m01, m10, m11);
}

// ---- finite binary-input channels ---------------------------------------

using ChannelRows = std::vector<std::array<double, 2>>;  // (W(y|0), W(y|1))

inline ChannelRows bec_rows(double p) { return {{1.0 - p, 0.0}, {0.0, 1.0 - p}, {p, p}}; }
inline ChannelRows bsc_rows(double p) { return {{1.0 - p, p}, {p, 1.0 - p}}; }

inline double mutual_information(const ChannelRows& rows) {
    double info = 0.0;
    for (const auto& r : rows) {
        const double py = 0.5 * (r[0] + r[1]);
        for (double w : {r[0], r[1]}) {
            if (w > 0.0) info += 0.5 * w * std::log2(w / py);
        }
    }
    return info;
}

inline double bhattacharyya(const ChannelRows& rows) {
    double z = 0.0;
    for (const auto& r : rows) z += std::sqrt(r[0] * r[1]);
    return z;
}

// ---- GF(2) matrix helpers ------------------------------------------------

inline std::vector<std::uint8_t> gf2_matvec(const polaract::GeneratorMatrix& g,
                                            const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> out(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < g.size(); ++j) acc ^= g.at(i, j) & v[j];
        out[i] = acc;
    }
    return out;
}

// ---- literal coset enumeration for partial distances ---------------------

// Row i of G as a word-packed bit vector.
inline std::vector<std::uint64_t> row_bits(const polaract::GeneratorMatrix& g, std::size_t i) {
    const auto words = g.row_words(i);
    return {words.begin(), words.end()};
}

inline int weight(const std::vector<std::uint64_t>& v) {
    int w = 0;
    for (std::uint64_t word : v) w += __builtin_popcountll(word);
    return w;
}

// min over c in span(rows[0..i)) of wt(rows[i] ^ c), by Gray-code walking the
// 2^i combinations. Feasible for i up to ~24.
inline std::uint64_t coset_min_weight(const polaract::GeneratorMatrix& g, std::size_t i) {
    auto current = row_bits(g, i);
    int best = weight(current);
    const std::uint64_t combos = std::uint64_t{1} << i;
    for (std::uint64_t step = 1; step < combos; ++step) {
        const int flip = __builtin_ctzll(step);  // Gray code: toggle one generator
        const auto gen = row_bits(g, static_cast<std::size_t>(flip));
        for (std::size_t w = 0; w < current.size(); ++w) current[w] ^= gen[w];
        best = std::min(best, weight(current));
    }
    return static_cast<std::uint64_t>(best);
}

// ---- exhaustive decoding oracles -----------------------------------------

// Exact posterior log-likelihood ratio ln(P(u_i=0 | y, u_{<i}) / P(u_i=1 | ...))
// by summing the joint over all completions. prefix holds the true u_{<i}.
inline double posterior_llr(const ChannelRows& w, int k,
                            const std::vector<int>& y,
                            const std::vector<std::uint8_t>& u_prefix) {
    const std::size_t n = std::size_t{1} << k;
    const std::size_t i = u_prefix.size();
    double prob[2] = {0.0, 0.0};
    const std::size_t tail = n - i - 1;
    for (int bit = 0; bit < 2; ++bit) {
        for (std::size_t rest = 0; rest < (std::size_t{1} << tail); ++rest) {
            std::vector<std::uint8_t> u(n);
            for (std::size_t j = 0; j < i; ++j) u[j] = u_prefix[j];
            u[i] = static_cast<std::uint8_t>(bit);
            for (std::size_t j = 0; j < tail; ++j) u[i + 1 + j] = (rest >> j) & 1u;
            polaract::polar_encode_inplace(u);
            double prod = 1.0;
            for (std::size_t j = 0; j < n; ++j) prod *= w[y[j]][u[j]];
            prob[bit] += prod;
        }
    }
    if (prob[0] == 0.0 && prob[1] == 0.0) return 0.0;
    if (prob[1] == 0.0) return std::numeric_limits<double>::infinity();
    if (prob[0] == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(prob[0] / prob[1]);
}

// All messages whose codeword agrees with the unerased positions.
// erased[j] true means position j carries no information.
inline std::vector<std::uint64_t> bec_ml_candidates(int k,
                                                    const std::vector<std::uint32_t>& info,
                                                    const std::vector<std::uint8_t>& codeword,
                                                    const std::vector<bool>& erased) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::uint64_t> hits;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << info.size()); ++m) {
        std::vector<std::uint8_t> u(n, 0);
        for (std::size_t b = 0; b < info.size(); ++b) u[info[b]] = (m >> b) & 1u;
        polaract::polar_encode_inplace(u);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            if (!erased[j] && u[j] != codeword[j]) ok = false;
        }
        if (ok) hits.push_back(m);
    }
    return hits;
}

}  // namespace oracles
