#include "polarkit/covering.hpp"

namespace polarkit {

namespace {
constexpr Complex I{0.0, 1.0};
}

SpinorParams SpinorParams::normalized(double tol) const {
    const Complex d = det();
    if (std::abs(d) <= tol)
        throw ConstraintError("SpinorParams: determinant vanishes, cannot normalize",
                              std::abs(d));
    const Complex s = 1.0 / std::sqrt(d);
    return *this * s;
}

SpinorMatrix spinor_matrix(const SpinorParams& k) {
    return {k.k0 + k.k3,        // a
            k.k0 - k.k3,        // b
            k.k1 + I * k.k2,    // c
            k.k1 - I * k.k2};   // d
}

SpinorParams spinor_params(const SpinorMatrix& m) {
    return {0.5 * (m.a + m.b),
            0.5 * (m.c + m.d),
            0.5 * (m.c - m.d) / I,
            0.5 * (m.a - m.b)};
}

SpinorParams compose_spinor(const SpinorParams& k1, const SpinorParams& k2) {
    return spinor_params(spinor_matrix(k1) * spinor_matrix(k2));
}

Matrix4C a_hat(const SpinorParams& k) {
    Matrix4C m;
    m(0, 0) = k.k0;      m(0, 1) = -k.k1;     m(0, 2) = -k.k2;     m(0, 3) = -k.k3;
    m(1, 0) = -k.k1;     m(1, 1) = k.k0;      m(1, 2) = -I * k.k3; m(1, 3) = I * k.k2;
    m(2, 0) = -k.k2;     m(2, 1) = I * k.k3;  m(2, 2) = k.k0;      m(2, 3) = -I * k.k1;
    m(3, 0) = -k.k3;     m(3, 1) = -I * k.k2; m(3, 2) = I * k.k1;  m(3, 3) = k.k0;
    return m;
}

Matrix4R covering_map(const SpinorParams& k, double tol) {
    SpinorParams u = k;
    const double dev = std::abs(u.det() - 1.0);
    if (dev > tol) {
        if (dev > 1e-6)
            throw ConstraintError("covering_map: spinor parameters are not unimodular",
                                  dev);
        u = u.normalized(tol);
    }
    const Matrix4C ah = a_hat(u);
    return real_part_checked(ah * ah.conj(), tol);
}

Matrix4R covering_map_via_trace(const SpinorParams& k, double tol) {
    SpinorParams u = k;
    const double dev = std::abs(u.det() - 1.0);
    if (dev > tol) {
        if (dev > 1e-6)
            throw ConstraintError("covering_map_via_trace: not unimodular", dev);
        u = u.normalized(tol);
    }
    const SpinorMatrix B = spinor_matrix(u);
    const SpinorMatrix Bdag = B.adjoint();

    // sigma_b lowered = (I, -sigma^j); sigmabar^a = (I, -sigma^j).
    auto lowered = [](int b) { return b == 0 ? pauli(0) : pauli(b) * Complex(-1.0); };
    auto bar = lowered;

    Matrix4C L;
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a) {
            const SpinorMatrix p = lowered(b) * B * bar(a) * Bdag;
            L(b, a) = 0.5 * (p.a + p.b);  // trace of (a d; c b)
        }
    return real_part_checked(L, tol);
}

Matrix4R mueller_for_spinor_action(const SpinorParams& k, double tol) {
    const Matrix4R g = Matrix4R::metric();
    return g * covering_map(k, tol) * g;
}

Matrix4R su2_rotation(double n0, const Vec3& n, double tol) {
    const double unit = n0 * n0 + n.norm2();
    if (std::abs(unit - 1.0) > std::max(tol, 1e-9))
        throw DomainError("su2_rotation: quaternion is not unit-normalized");
    const double n1 = n.x, n2 = n.y, n3 = n.z;
    Matrix4R m = Matrix4R::identity();
    m(1, 1) = 1.0 - 2.0 * (n2 * n2 + n3 * n3);
    m(1, 2) = -2.0 * n0 * n3 + 2.0 * n1 * n2;
    m(1, 3) = 2.0 * n0 * n2 + 2.0 * n1 * n3;
    m(2, 1) = 2.0 * n0 * n3 + 2.0 * n1 * n2;
    m(2, 2) = 1.0 - 2.0 * (n1 * n1 + n3 * n3);
    m(2, 3) = -2.0 * n0 * n1 + 2.0 * n2 * n3;
    m(3, 1) = -2.0 * n0 * n2 + 2.0 * n1 * n3;
    m(3, 2) = 2.0 * n0 * n1 + 2.0 * n2 * n3;
    m(3, 3) = 1.0 - 2.0 * (n1 * n1 + n2 * n2);
    return m;
}

namespace {
Vec3 checked_axis(const Vec3& e, double tol) {
    const double len = e.norm();
    if (len < 1e-12) throw DomainError("axis vector has zero length");
    if (std::abs(len - 1.0) > std::max(tol, 1e-9))
        throw DomainError("axis vector must be unit length");
    return e / len;
}
} // namespace

SpinorParams boost(double beta, const Vec3& e, double tol) {
    if (beta == 0.0) return SpinorParams::one();
    const Vec3 u = checked_axis(e, tol);
    const double c = std::cosh(beta / 2.0), s = std::sinh(beta / 2.0);
    return {c, s * u.x, s * u.y, s * u.z};
}

SpinorParams rotation(double phi, const Vec3& e, double tol) {
    if (phi == 0.0) return SpinorParams::one();
    const Vec3 u = checked_axis(e, tol);
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    return {c, -I * (s * u.x), -I * (s * u.y), -I * (s * u.z)};
}

Matrix4C pi_conjugate(const Matrix4C& r) {
    // Pi = diag(1, i, i, i): (Pi^-1 R Pi)_ij = R_ij * pi_j / pi_i.
    Matrix4C out = r;
    for (int j = 1; j < 4; ++j) out(0, j) *= I;
    for (int i = 1; i < 4; ++i) out(i, 0) *= -I;
    return out;
}

Matrix4C u_similarity() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4C m;
    m(0, 1) = -1.0; m(0, 2) = I;
    m(1, 0) = I;    m(1, 3) = 1.0;
    m(2, 0) = -1.0; m(2, 3) = -I;
    m(3, 1) = -I;   m(3, 2) = 1.0;
    return m * s;
}

Matrix4C v_similarity() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4C m;
    m(0, 1) = -1.0; m(0, 2) = -I;
    m(1, 0) = I;    m(1, 3) = 1.0;
    m(2, 0) = -1.0; m(2, 3) = -I;
    m(3, 1) = -I;   m(3, 2) = -1.0;
    return m * s;
}

} // namespace polarkit
