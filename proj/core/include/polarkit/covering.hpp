#pragma once

#include "polarkit/types.hpp"

namespace polarkit {

/// Complex 4-tuple k = (k0, k1, k2, k3) parametrizing a spinor matrix
/// B(k) = k0 + k_j sigma^j and, through the double cover, a Lorentz
/// (Mueller) matrix.  Real split: k0 = n0 + i m0, k_j = -i n_j + m_j.
struct SpinorParams {
    Complex k0{}, k1{}, k2{}, k3{};

    static SpinorParams one() { return {1.0, 0.0, 0.0, 0.0}; }
    static SpinorParams from_split(double n0, double m0, const Vec3& n, const Vec3& m) {
        return {Complex{n0, m0},
                Complex{m.x, -n.x},
                Complex{m.y, -n.y},
                Complex{m.z, -n.z}};
    }

    double n0() const { return k0.real(); }
    double m0() const { return k0.imag(); }
    Vec3 n() const { return {-k1.imag(), -k2.imag(), -k3.imag()}; }
    Vec3 m() const { return {k1.real(), k2.real(), k3.real()}; }

    /// det B(k) = k0^2 - k.k.
    Complex det() const { return k0 * k0 - (k1 * k1 + k2 * k2 + k3 * k3); }

    SpinorParams operator-() const { return {-k0, -k1, -k2, -k3}; }
    SpinorParams operator*(Complex s) const { return {k0 * s, k1 * s, k2 * s, k3 * s}; }
    SpinorParams conj() const {
        return {std::conj(k0), std::conj(k1), std::conj(k2), std::conj(k3)};
    }

    /// Rescale so that det B(k) = 1 (principal square root of det).
    /// Throws when det vanishes.
    SpinorParams normalized(double tol = kDefaultTol) const;
};

/// B(k) = k0 + k_j sigma^j with entries a = k0+k3, d = k1-i k2,
/// c = k1+i k2, b = k0-k3.
SpinorMatrix spinor_matrix(const SpinorParams& k);

/// Pullback of a 2x2 matrix to its sigma coefficients.
SpinorParams spinor_params(const SpinorMatrix& m);

/// Product of two elements expressed on the parameter level:
/// spinor_matrix(result) = spinor_matrix(k1) * spinor_matrix(k2).
SpinorParams compose_spinor(const SpinorParams& k1, const SpinorParams& k2);

/// The complex factor matrix with first row (k0, -k1, -k2, -k3); the
/// Lorentz image is a_hat(k) * conj(a_hat(k)), the two factors commuting.
Matrix4C a_hat(const SpinorParams& k);

/// Two-to-one covering map onto the proper Lorentz group: the real
/// matrix a_hat(k) * conj(a_hat(k)) for unit-determinant k.  Inputs with
/// |det-1| below 1e-6 are renormalized; beyond that it is an error.
Matrix4R covering_map(const SpinorParams& k, double tol = kDefaultTol);

/// Same map evaluated through the Pauli trace formula
/// L_b^a = 1/2 tr(sigma_b B sigmabar^a B^dagger); agreement with
/// covering_map is a library invariant.
Matrix4R covering_map_via_trace(const SpinorParams& k, double tol = kDefaultTol);

/// Mueller matrix matched to the spinor action psi -> B(k) psi, i.e.
/// the transform satisfied by S(psi) built from psi x psi^dagger.
/// Equals g * covering_map(k) * g with g the Minkowski metric.
Matrix4R mueller_for_spinor_action(const SpinorParams& k, double tol = kDefaultTol);

/// Block rotation 1 (+) R(n) for a real unit quaternion (n0, n); equal
/// for (n0, n) and (-n0, -n).
Matrix4R su2_rotation(double n0, const Vec3& n, double tol = kDefaultTol);

/// Boost of rapidity beta along the unit axis e: k = (ch(beta/2), sh(beta/2) e).
SpinorParams boost(double beta, const Vec3& e, double tol = kDefaultTol);
/// Rotation by phi about the unit axis e: k = (cos(phi/2), -i sin(phi/2) e).
SpinorParams rotation(double phi, const Vec3& e, double tol = kDefaultTol);

/// Pi^-1 R Pi with Pi = diag(1, i, i, i); maps the mixed-signature
/// quadratic form onto the real Lorentz form.
Matrix4C pi_conjugate(const Matrix4C& r);

/// Fixed similarity transform reducing a0*I + a_i alpha^i to a
/// quasi-diagonal pair of 2x2 blocks a0*I - i sigma_j a_j.
Matrix4C u_similarity();
/// The beta-family twin of u_similarity().
Matrix4C v_similarity();

} // namespace polarkit
