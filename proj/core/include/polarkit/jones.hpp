#pragma once

#include "polarkit/covering.hpp"
#include "polarkit/stokes.hpp"

namespace polarkit {

/// Complex 2-vector of field amplitudes (psi1, psi2); intensity is
/// |psi1|^2 + |psi2|^2.
struct JonesSpinor {
    Complex psi1{}, psi2{};

    static JonesSpinor from_amplitude_phase(double n, double m, double alpha,
                                            double beta);

    double amplitude_n() const { return std::abs(psi1); }
    double amplitude_m() const { return std::abs(psi2); }
    double intensity() const { return std::norm(psi1) + std::norm(psi2); }

    JonesSpinor operator*(Complex s) const { return {psi1 * s, psi2 * s}; }
    JonesSpinor operator-() const { return {-psi1, -psi2}; }

    double max_abs_diff(const JonesSpinor& o) const {
        return std::max(std::abs(psi1 - o.psi1), std::abs(psi2 - o.psi2));
    }
    /// Distance up to the overall sign of the double cover.
    double dist_up_to_sign(const JonesSpinor& o) const {
        return std::min(max_abs_diff(o), max_abs_diff(-o));
    }
};

/// Jones spinor together with the flags raised on the degenerate axis
/// S1 = S2 = 0 (mute phase) and near the Delta = pi branch seam.
struct JonesChart {
    JonesSpinor psi;
    bool degenerate_axis = false;
    bool near_branch_seam = false;
};

/// Spinor of an isotropic Stokes vector:
/// e^{i gamma/2} (sqrt((S0+S3)/2) e^{-i D/2}, sqrt((S0-S3)/2) e^{+i D/2})
/// with D = atan2(S2, S1).  On the axis S1 = S2 = 0 the phase D is mute;
/// `mute_phase` is used there and the degeneracy flag set.
JonesChart jones_from_stokes(const StokesVector& s, double gamma = 0.0,
                             double mute_phase = 0.0, double tol = kDefaultTol);

/// (N^2+M^2, 2NM cos(b-a), 2NM sin(b-a), N^2-M^2); always isotropic.
StokesVector stokes_from_jones(const JonesSpinor& psi);

/// Parameters of the alternative (P-reflected) spinor model: moduli
/// sqrt(S -+ rho) with rho = sqrt(S1^2+S2^2), phases -+ Delta/2, and the
/// sign of S3 selecting the half-space chart.
struct AltSpinor {
    JonesSpinor psi;
    double n_prime = 0.0;
    double m_prime = 0.0;
    double delta = 0.0;
    int s3_sign = +1;
    bool degenerate_axis = false;
};

/// Alternative-model spinor of an isotropic Stokes vector (half-space
/// charts over S3 > 0 and S3 < 0; the axis S1 = S2 = 0 is singular).
AltSpinor alt_spinor_model(const StokesVector& s, double mute_phase = 0.0,
                           double tol = kDefaultTol);

/// Model conversion psi' = (psi - i s2 psi*)/sqrt(2) and its inverse
/// psi = (psi' + i s2 psi'*)/sqrt(2); the pair composes to the identity.
JonesSpinor convert_models(const JonesSpinor& psi);
JonesSpinor convert_models_inverse(const JonesSpinor& psi_prime);

/// Stokes vector rebuilt from alternative-model parameters:
/// S0 = (N'^2+M'^2)/2, rho = (M'^2-N'^2)/2, S3 = sign * N'M'.
StokesVector alt_model_stokes(const AltSpinor& alt);

/// Pair of opposite-chirality 2-spinors (xi, eta).  Completely
/// polarized light satisfies eta = -i s2 xi* (the reality condition).
struct JonesBiSpinor {
    Complex xi1{}, xi2{};
    Complex eta1{}, eta2{};

    static JonesBiSpinor completely_polarized(Complex xi1, Complex xi2);
    /// Amplitude/phase form (N1, N2, n1, n2, M1, M2, m1, m2).
    static JonesBiSpinor from_amplitude_phase(double N1, double N2, double n1,
                                              double n2, double M1, double M2,
                                              double m1, double m2);

    bool is_completely_polarized(double tol = kDefaultTol) const;
};

/// Irreducible pieces of the tensor square of a bi-spinor.  For the
/// square of a single bi-spinor the scalar, pseudoscalar and
/// pseudovector vanish identically; the complex vector is isotropic.
struct BiSpinorDecomposition {
    Complex scalar{};
    Complex pseudoscalar{};
    std::array<Complex, 4> vector{};
    std::array<Complex, 4> pseudovector{};
    /// Antisymmetric complex tensor Phi^{mn} (contravariant entries).
    Matrix4C tensor;

    /// Minkowski square of the complex vector (zero for any bi-spinor).
    Complex vector_invariant() const {
        return vector[0] * vector[0] - vector[1] * vector[1] -
               vector[2] * vector[2] - vector[3] * vector[3];
    }
};

BiSpinorDecomposition bispinor_decompose(const JonesBiSpinor& b);

/// Antisymmetric Stokes 2-rank tensor of a completely polarized beam,
/// stored as the two real 3-vectors a = (S01, S02, S03) and
/// b = (S23, S31, S12).
struct StokesTensor {
    Vec3 a{};
    Vec3 b{};

    CVec3 s() const {
        return {Complex{a.x, b.x}, Complex{a.y, b.y}, Complex{a.z, b.z}};
    }
    /// I1 = -1/2 S^{mn} S_{mn} = |a|^2 - |b|^2.
    double invariant1() const { return a.norm2() - b.norm2(); }
    /// I2 = 1/4 eps_{abmn} S^{ab} S^{mn} = a.b.
    double invariant2() const { return a.dot(b); }
};

struct PolarizedTensor {
    StokesVector stokes;
    StokesTensor tensor;
};

/// Stokes 4-vector and 2-rank tensor of a completely polarized beam
/// given by xi (eta is built in through the reality condition).
PolarizedTensor polarized_stokes_tensor(Complex xi1, Complex xi2);

/// Real time-like (or isotropic) Stokes 4-vector of a general bi-spinor
/// through the Psi x (-i Psi^c) square; zero input is an error.
StokesVector partly_polarized_stokes(const JonesBiSpinor& b);

/// Bounds (N1 M1 -+ N2 M2)^2 of the partly polarized invariant.
std::pair<double, double> partly_polarized_bounds(const JonesBiSpinor& b);

} // namespace polarkit
