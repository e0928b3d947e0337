#pragma once

#include <array>
#include <complex>

namespace polaract {

/// A 2x2 density operator: Hermitian, unit trace, positive semidefinite.
/// Construction validates all three invariants to 1e-12 and throws
/// std::domain_error on violation. Instances are immutable values.
class DensityMatrix2 {
public:
    using complexd = std::complex<double>;

    DensityMatrix2(complexd m00, complexd m01, complexd m10, complexd m11);

    /// Builds (I + rx*X + ry*Y + rz*Z)/2 from a Bloch vector with |r| <= 1.
    static DensityMatrix2 from_bloch(double rx, double ry, double rz);

    static DensityMatrix2 ket0();             // |0><0|
    static DensityMatrix2 ket1();             // |1><1|
    static DensityMatrix2 plus_state();       // |+><+|
    static DensityMatrix2 maximally_mixed();  // I/2

    complexd at(int row, int col) const { return e_[row * 2 + col]; }

    double trace() const;
    /// Real for Hermitian matrices; clamped to >= 0 for exact PSD inputs.
    double determinant() const;
    /// Closed-form eigenvalues (trace/determinant), descending order.
    std::array<double, 2> eigenvalues() const;

    bool approx_equal(const DensityMatrix2& other, double tol = 1e-12) const;

private:
    std::array<complexd, 4> e_;
};

/// Von Neumann entropy in bits, with the 0*log(0) := 0 convention.
double entropy_bits(const DensityMatrix2& rho);

}  // namespace polaract
