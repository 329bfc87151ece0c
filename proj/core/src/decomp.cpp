#include "polarkit/decomp.hpp"

namespace polarkit {

namespace {
constexpr Complex I{0.0, 1.0};

SpinorMatrix sigma_dot_real(const Vec3& v) {
    SpinorMatrix m;
    for (int j = 1; j <= 3; ++j) m = m + pauli(j) * Complex(v[j - 1]);
    return m;
}
} // namespace

SpinorMatrix PolarDecomposition::rotation_factor() const {
    return pauli(0) * Complex(r0) + sigma_dot_real(r) * (-I);
}

SpinorMatrix PolarDecomposition::boost_factor() const {
    const double b2 = velocity.norm2();
    const double f = 1.0 / std::sqrt(1.0 - b2);
    return (pauli(0) + sigma_dot_real(velocity)) * Complex(f);
}

SpinorMatrix PolarDecomposition::product() const {
    return order == Order::rotation_boost ? rotation_factor() * boost_factor()
                                          : boost_factor() * rotation_factor();
}

namespace {

PolarDecomposition polar_split(const SpinorParams& k, double cross_sign,
                               PolarDecomposition::Order order, double tol) {
    SpinorParams u = k;
    const double dev = std::abs(u.det() - 1.0);
    if (dev > tol) {
        if (dev > 1e-6)
            throw ConstraintError("polar decomposition: spinor parameters are "
                                  "not unimodular", dev);
        u = u.normalized(tol);
    }
    const double n0 = u.n0(), m0 = u.m0();
    const Vec3 n = u.n(), m = u.m();
    const double denom = n0 * n0 + n.norm2();
    if (denom <= tol)
        throw ConstraintError("polar decomposition: degenerate element, "
                              "n0^2 + |n|^2 ~ 0", denom);
    PolarDecomposition d;
    d.order = order;
    const double rnorm = std::sqrt(denom);
    d.r0 = n0 / rnorm;
    d.r = n / rnorm;
    d.velocity = (n0 * m - m0 * n + cross_sign * m.cross(n)) / denom;
    if (d.velocity.norm2() >= 1.0)
        throw ConstraintError("polar decomposition: velocity reached the light cone",
                              d.velocity.norm());
    return d;
}

} // namespace

PolarDecomposition polar_rotation_boost(const SpinorParams& k, double tol) {
    return polar_split(k, +1.0, PolarDecomposition::Order::rotation_boost, tol);
}

PolarDecomposition polar_boost_rotation(const SpinorParams& k, double tol) {
    return polar_split(k, -1.0, PolarDecomposition::Order::boost_rotation, tol);
}

BoostQuat::BoostQuat(double b0_, const Vec3& b_, double tol) : b0(b0_), b(b_) {
    if (std::abs(b0 * b0 - b.norm2() - 1.0) > std::max(tol, 1e-9))
        throw DomainError("BoostQuat: requires b0^2 - |b|^2 = 1");
    if (b0 < 0.0) throw DomainError("BoostQuat: b0 must be positive");
}

BoostQuat BoostQuat::from_rapidity(double beta, const Vec3& e, double tol) {
    const double len = e.norm();
    if (len < 1e-12) throw DomainError("BoostQuat: zero axis");
    if (std::abs(len - 1.0) > std::max(tol, 1e-9))
        throw DomainError("BoostQuat: axis must be unit length");
    return BoostQuat(std::cosh(beta / 2.0), e * std::sinh(beta / 2.0), tol);
}

BoostComposition compose_boosts(const BoostQuat& first, const BoostQuat& second,
                                double tol) {
    // (b'0 + b'.sigma)(b0 + b.sigma) with b' the second factor:
    //   n0 = b'0 b0 + b'.b,  n = b x b',  m0 = 0,  m = b'0 b + b0 b'.
    const double n0 = second.b0 * first.b0 + second.b.dot(first.b);
    const Vec3 n = first.b.cross(second.b);
    const Vec3 m = second.b0 * first.b + first.b0 * second.b;

    BoostComposition out;
    out.k = SpinorParams::from_split(n0, 0.0, n, m).normalized(tol);
    out.thomas = polar_rotation_boost(out.k, tol);
    return out;
}

} // namespace polarkit
