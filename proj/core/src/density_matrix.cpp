#include "polaract/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace polaract {

namespace {

constexpr double kTol = 1e-12;

}  // namespace

DensityMatrix2::DensityMatrix2(complexd m00, complexd m01, complexd m10, complexd m11)
    : e_{m00, m01, m10, m11} {
    if (std::abs(m00.imag()) > kTol || std::abs(m11.imag()) > kTol ||
        std::abs(m01 - std::conj(m10)) > kTol) {
        throw std::domain_error("DensityMatrix2: not Hermitian");
    }
    if (std::abs(m00.real() + m11.real() - 1.0) > kTol) {
        throw std::domain_error("DensityMatrix2: trace != 1");
    }
    const double lambda_min = eigenvalues()[1];
    if (lambda_min < -kTol) {
        throw std::domain_error("DensityMatrix2: not positive semidefinite");
    }
}

DensityMatrix2 DensityMatrix2::from_bloch(double rx, double ry, double rz) {
    const double r2 = rx * rx + ry * ry + rz * rz;
    if (r2 > 1.0 + 1e-9) {
        throw std::domain_error("DensityMatrix2::from_bloch: |r| > 1");
    }
    using cd = complexd;
    return DensityMatrix2(cd{(1.0 + rz) / 2.0, 0.0},
                          cd{rx / 2.0, -ry / 2.0},
                          cd{rx / 2.0, ry / 2.0},
                          cd{(1.0 - rz) / 2.0, 0.0});
}

DensityMatrix2 DensityMatrix2::ket0() { return from_bloch(0.0, 0.0, 1.0); }
DensityMatrix2 DensityMatrix2::ket1() { return from_bloch(0.0, 0.0, -1.0); }
DensityMatrix2 DensityMatrix2::plus_state() { return from_bloch(1.0, 0.0, 0.0); }
DensityMatrix2 DensityMatrix2::maximally_mixed() { return from_bloch(0.0, 0.0, 0.0); }

double DensityMatrix2::trace() const { return e_[0].real() + e_[3].real(); }

double DensityMatrix2::determinant() const {
    return e_[0].real() * e_[3].real() - std::norm(e_[1]);
}

std::array<double, 2> DensityMatrix2::eigenvalues() const {
    // Unit trace: lambda = 1/2 +- sqrt(1/4 - det).
    const double disc = std::max(0.25 - determinant(), 0.0);
    const double s = std::sqrt(disc);
    return {0.5 + s, 0.5 - s};
}

bool DensityMatrix2::approx_equal(const DensityMatrix2& other, double tol) const {
    for (int i = 0; i < 4; ++i) {
        if (std::abs(e_[i] - other.e_[i]) > tol) return false;
    }
    return true;
}

double entropy_bits(const DensityMatrix2& rho) {
    double s = 0.0;
    for (double lambda : rho.eigenvalues()) {
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return s;
}

}  // namespace polaract
