#pragma once

#include "polarkit/types.hpp"

namespace polarkit {

/// 3x3 complex coefficient block C_ij of the 16-parameter chart.
struct Mat3C {
    std::array<Complex, 9> e{};
    Complex& operator()(int i, int j) { return e[3 * i + j]; }
    const Complex& operator()(int i, int j) const { return e[3 * i + j]; }
};

/// Coefficients (E, A_i, B_i, C_ij) of a 4x4 matrix over the basis
/// { I, alpha^i, beta^i, alpha^i beta^j }.  Unrestricted: this is a
/// global chart of GL(4,C).
struct GroupElementParams {
    Complex E{};
    CVec3 A{};
    CVec3 B{};
    Mat3C C{};
};

/// Four complex parameters (a0, a) of one commuting subgroup element
/// a0*I + a_i alpha^i (or the beta twin).
struct QuadParam {
    Complex a0{};
    CVec3 a{};

    /// Complex "norm" a0^2 + a.a; the matrix determinant is its square.
    Complex norm2() const { return a0 * a0 + a.dot(a); }
};

enum class QuadFamily { alpha, beta };

/// Basis matrix alpha^i (exact integer entries), i in 1..3.
Matrix4C alpha_basis(int i);
/// Basis matrix beta^i (exact integer entries), i in 1..3.
Matrix4C beta_basis(int i);

/// E*I + sum A_i alpha^i + sum B_i beta^i + sum C_ij alpha^i beta^j.
Matrix4C assemble(const GroupElementParams& p);

/// Inverse of assemble: coefficients recovered by trace inner products
/// against the (orthogonal) basis.
GroupElementParams project_params(const Matrix4C& m);

/// Closed-form coefficients of assemble(p1) * assemble(p2).
GroupElementParams compose_params(const GroupElementParams& p1,
                                  const GroupElementParams& p2);

/// a0*I + a_i alpha^i as an explicit 4x4 matrix.
Matrix4C r_alpha(const QuadParam& q);
/// b0*I + b_i beta^i as an explicit 4x4 matrix.
Matrix4C r_beta(const QuadParam& q);

/// Quaternion-style product: parameters of r(q1) * r(q2) within the
/// given family (the beta family carries the opposite cross-term sign).
QuadParam compose_quad(const QuadParam& q1, const QuadParam& q2, QuadFamily family);

/// Parameters of the matrix inverse: (a0, -a) / norm2.  Throws
/// ConstraintError when norm2 vanishes (singular element).
QuadParam quad_inverse(const QuadParam& q, QuadFamily family, double tol = kDefaultTol);

} // namespace polarkit
