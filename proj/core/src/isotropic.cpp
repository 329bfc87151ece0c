#include "polarkit/isotropic.hpp"

namespace polarkit {

namespace {
constexpr Complex I{0.0, 1.0};
}

Matrix4C isotropic_basis() {
    const double f = 1.0 / std::sqrt(2.0);
    Matrix4C s;
    s(0, 0) = 1.0; s(0, 3) = 1.0;
    s(1, 0) = 1.0; s(1, 3) = -1.0;
    s(2, 1) = 1.0; s(2, 2) = -I;
    s(3, 1) = 1.0; s(3, 2) = I;
    return s * f;
}

Matrix4C isotropic_basis_inverse() {
    const double f = 1.0 / std::sqrt(2.0);
    Matrix4C s;
    s(0, 0) = 1.0; s(0, 1) = 1.0;
    s(1, 2) = 1.0; s(1, 3) = 1.0;
    s(2, 2) = I;   s(2, 3) = -I;
    s(3, 0) = 1.0; s(3, 1) = -1.0;
    return s * f;
}

Matrix4C to_isotropic(const Matrix4C& l) {
    return isotropic_basis() * l * isotropic_basis_inverse();
}

Matrix4C to_isotropic(const Matrix4R& l) { return to_isotropic(l.complex()); }

Matrix4C from_isotropic(const Matrix4C& u) {
    return isotropic_basis_inverse() * u * isotropic_basis();
}

Matrix4C isotropic_from_spinor(const SpinorMatrix& m, double tol) {
    SpinorMatrix w = m;
    const double dev = std::abs(w.det() - 1.0);
    if (dev > tol) {
        if (dev > 1e-6)
            throw ConstraintError("isotropic_from_spinor: matrix is not unimodular",
                                  dev);
        w = w * (1.0 / std::sqrt(w.det()));
    }
    const Complex a = w.a, b = w.b, c = w.c, d = w.d;
    const Complex ac = std::conj(a), bc = std::conj(b), cc = std::conj(c),
                  dc = std::conj(d);
    Matrix4C u;
    u(0, 0) = b * bc;  u(0, 1) = c * cc;  u(0, 2) = -c * bc; u(0, 3) = -b * cc;
    u(1, 0) = d * dc;  u(1, 1) = a * ac;  u(1, 2) = -a * dc; u(1, 3) = -d * ac;
    u(2, 0) = -d * bc; u(2, 1) = -a * cc; u(2, 2) = a * bc;  u(2, 3) = d * cc;
    u(3, 0) = -b * dc; u(3, 1) = -c * ac; u(3, 2) = c * dc;  u(3, 3) = b * ac;
    return u;
}

IsotropicFactors IsotropicFactors::from_spinor(const SpinorMatrix& m) {
    auto split = [](Complex z, double& mod, Complex& phase) {
        mod = std::abs(z);
        phase = mod > 0.0 ? z / mod : Complex{1.0};
    };
    IsotropicFactors f;
    split(m.a, f.A, f.alpha);
    split(m.b, f.B, f.beta);
    split(m.c, f.C, f.s);
    split(m.d, f.D, f.t);
    return f;
}

SpinorMatrix recover_spinor(const Matrix4C& u, double tol) {
    // Squared moduli sit in the upper-left corner block.
    const double scale = std::max(1.0, u.max_abs());
    auto nonneg_real = [&](const Complex& z, const char* what) {
        if (std::abs(z.imag()) > std::sqrt(tol) * scale || z.real() < -std::sqrt(tol) * scale)
            throw ConstraintError(std::string("recover_spinor: ") + what +
                                  " is not a nonnegative real, matrix not in the image");
        return std::max(0.0, z.real());
    };
    const double B2 = nonneg_real(u(0, 0), "U00");
    const double C2 = nonneg_real(u(0, 1), "U01");
    const double D2 = nonneg_real(u(1, 0), "U10");
    const double A2 = nonneg_real(u(1, 1), "U11");

    const double branch_tol = std::sqrt(tol) * scale;
    SpinorMatrix m;
    if (C2 <= branch_tol && D2 <= branch_tol) {
        // diagonal branch: a^2 = U11 * U22, b = 1/a
        const Complex a = std::sqrt(Complex(A2) * u(2, 2));
        if (std::abs(a) < std::sqrt(branch_tol))
            throw ConstraintError("recover_spinor: degenerate diagonal branch");
        m = {a, 1.0 / a, 0.0, 0.0};
    } else if (A2 <= branch_tol && B2 <= branch_tol) {
        // anti-diagonal branch: c^2 = -U01 * U32, d = -1/c
        const Complex c = std::sqrt(-Complex(C2) * u(3, 2));
        if (std::abs(c) < std::sqrt(branch_tol))
            throw ConstraintError("recover_spinor: degenerate anti-diagonal branch");
        m = {0.0, 0.0, c, -1.0 / c};
    } else {
        // generic: a^2 = U11 U22 - U12 U21 (unimodularity folded in),
        // then the remaining entries from the a-row products
        //   a b* = U22, a c* = -U21, a d* = -U12.
        const Complex a2 = Complex(A2) * u(2, 2) - u(1, 2) * u(2, 1);
        const Complex b2 = Complex(B2) * u(3, 3) - u(0, 3) * u(3, 0);
        if (std::abs(a2) >= std::abs(b2)) {
            const Complex a = std::sqrt(a2);
            if (std::abs(a) < std::sqrt(branch_tol))
                throw ConstraintError("recover_spinor: vanishing pivot in generic branch");
            m.a = a;
            m.b = std::conj(u(2, 2) / a);
            m.c = std::conj(-u(2, 1) / a);
            m.d = std::conj(-u(1, 2) / a);
        } else {
            // b-row products: b a* = U33, b c* = -U03, b d* = -U30.
            const Complex b = std::sqrt(b2);
            if (std::abs(b) < std::sqrt(branch_tol))
                throw ConstraintError("recover_spinor: vanishing pivot in generic branch");
            m.b = b;
            m.a = std::conj(u(3, 3) / b);
            m.c = std::conj(-u(0, 3) / b);
            m.d = std::conj(-u(3, 0) / b);
        }
    }

    // Global sign: Re a >= 0, ties broken by Re c >= 0.
    const double sign_tol = 1e-12 * std::max(1.0, m.max_abs());
    if (m.a.real() < -sign_tol ||
        (std::abs(m.a.real()) <= sign_tol && m.c.real() < -sign_tol)) {
        m = -m;
    }

    const double residual = isotropic_from_spinor(m, 1e-5).max_abs_diff(u);
    if (residual > std::sqrt(tol) * scale)
        throw ConstraintError("recover_spinor: input is not the isotropic image of "
                              "a unimodular spinor matrix", residual);
    return m;
}

IsotropicStokes stokes_to_isotropic(const StokesVector& s) {
    const auto z = isotropic_basis() * std::array<Complex, 4>{s.s0, s.s1, s.s2, s.s3};
    return {z[0], z[1], z[2], z[3]};
}

StokesVector stokes_from_isotropic(const IsotropicStokes& z, double tol) {
    const double scale = std::max(1.0, std::abs(z.z0));
    if (std::abs(z.z0.imag()) > tol * scale || std::abs(z.z1.imag()) > tol * scale ||
        std::abs(z.z2 - std::conj(z.z3)) > tol * scale)
        throw DomainError("stokes_from_isotropic: violated reality structure "
                          "(Z0, Z1 real, Z3 = conj Z2)");
    const auto s = isotropic_basis_inverse() * z.array();
    return {s[0].real(), s[1].real(), s[2].real(), s[3].real()};
}

} // namespace polarkit
