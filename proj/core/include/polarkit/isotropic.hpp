#pragma once

#include "polarkit/covering.hpp"
#include "polarkit/stokes.hpp"

namespace polarkit {

/// Stokes vector in the isotropic basis: Z0, Z1 real, Z3 = conj(Z2) for
/// any real input vector.
struct IsotropicStokes {
    Complex z0{}, z1{}, z2{}, z3{};

    std::array<Complex, 4> array() const { return {z0, z1, z2, z3}; }
};

/// Fixed basis-change matrix S (with its 1/sqrt(2) factor) and its inverse.
Matrix4C isotropic_basis();
Matrix4C isotropic_basis_inverse();

/// Conjugation into the isotropic basis: U = S L S^-1.
Matrix4C to_isotropic(const Matrix4C& l);
Matrix4C to_isotropic(const Matrix4R& l);
/// Inverse conjugation: L = S^-1 U S.
Matrix4C from_isotropic(const Matrix4C& u);

/// The bilinear isotropic-form Lorentz matrix built directly from a
/// unimodular spinor matrix (rows bb*, cc*, -cb*, -bc* / ...).
Matrix4C isotropic_from_spinor(const SpinorMatrix& m, double tol = kDefaultTol);

/// Modulus/phase factorization a = A alpha, b = B beta, c = C s, d = D t
/// of a spinor matrix.  The unit determinant couples the moduli to the
/// phases: A B = alpha beta (s^2 t^2 - 1)/(s^2 t^2 - alpha^2 beta^2) and
/// the C D twin, whenever the denominator is nonzero.
struct IsotropicFactors {
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
    Complex alpha{1.0}, beta{1.0}, s{1.0}, t{1.0};

    static IsotropicFactors from_spinor(const SpinorMatrix& m);
    SpinorMatrix spinor() const {
        return {A * alpha, B * beta, C * s, D * t};
    }
};

/// Recovers the spinor matrix (up to global sign, fixed by Re a >= 0,
/// tie-broken by Re c >= 0) from a Lorentz matrix in isotropic form.
/// Handles the generic branch and the two degenerate branches c = d = 0
/// and a = b = 0; inputs not in the image raise ConstraintError with
/// the reconstruction residual.
SpinorMatrix recover_spinor(const Matrix4C& u, double tol = kDefaultTol);

/// Z = S_matrix * S.
IsotropicStokes stokes_to_isotropic(const StokesVector& s);
/// Inverse map; validates the reality structure of Z.
StokesVector stokes_from_isotropic(const IsotropicStokes& z, double tol = kDefaultTol);

} // namespace polarkit
