#include "polarkit/stokes.hpp"

namespace polarkit {

StokesVector StokesVector::physical(double s0, double s1, double s2, double s3,
                                    double tol) {
    if (!(s0 >= 0.0)) throw DomainError("StokesVector: intensity must be nonnegative");
    const StokesVector s{s0, s1, s2, s3};
    const double len = s.spatial().norm();
    if (len > s0 * (1.0 + tol) + tol)
        throw DomainError("StokesVector: degree of polarization exceeds 1");
    return s;
}

double StokesVector::degree(double tol) const {
    if (s0 <= tol) throw DomainError("StokesVector: degree undefined at zero intensity");
    return spatial().norm() / s0;
}

WaveParams::WaveParams(double n, double m, double delta) : N(n), M(m), Delta(delta) {
    if (N < 0.0 || M < 0.0) throw DomainError("WaveParams: amplitudes must be nonnegative");
    if (Delta < -M_PI - 1e-12 || Delta > M_PI + 1e-12)
        throw DomainError("WaveParams: phase shift outside [-pi, pi]");
}

BoostSpec::BoostSpec(double b, const Vec3& axis, double tol) : beta(b), e(axis) {
    const double len = e.norm();
    if (len < 1e-12) throw DomainError("BoostSpec: zero axis");
    if (std::abs(len - 1.0) > std::max(tol, 1e-9))
        throw DomainError("BoostSpec: axis must be unit length");
}

StokesVector stokes_from_wave(const WaveParams& w) {
    const double n2 = w.N * w.N, m2 = w.M * w.M;
    return {n2 + m2, 2.0 * w.N * w.M * std::cos(w.Delta),
            2.0 * w.N * w.M * std::sin(w.Delta), n2 - m2};
}

StokesVector mix_with_natural(const StokesVector& polarized, double i_natural,
                              double tol) {
    if (i_natural < 0.0) throw DomainError("mix_with_natural: negative intensity");
    if (!polarized.isotropic(tol))
        throw DomainError("mix_with_natural: beam is not completely polarized");
    return {polarized.s0 + i_natural, polarized.s1, polarized.s2, polarized.s3};
}

StokesVector boost_stokes(const StokesVector& s, const BoostSpec& b) {
    const double ch = std::cosh(b.beta), sh = std::sinh(b.beta);
    const Vec3 sp = s.spatial();
    const double ep = b.e.dot(sp);
    const double i1 = ch * s.s0 - sh * ep;
    const Vec3 sp1 = sp - sh * s.s0 * b.e + (ch - 1.0) * ep * b.e;
    return {i1, sp1.x, sp1.y, sp1.z};
}

BoostSpec rest_frame(const StokesVector& s, double tol) {
    const double p = s.degree(tol);
    if (p >= 1.0 - tol)
        throw ConstraintError("rest_frame: isotropic Stokes vector has no rest frame", p);
    if (p <= tol) return BoostSpec{};  // already natural light
    const Vec3 n = s.spatial() / s.spatial().norm();
    return BoostSpec(std::atanh(p), n, tol);
}

double ellipsoid_residual(double p, const StokesVector& s_boosted, const BoostSpec& b) {
    if (p < 0.0 || p > 1.0) throw DomainError("ellipsoid_residual: p outside [0,1]");
    if (s_boosted.s0 <= 0.0)
        throw DomainError("ellipsoid_residual: boosted beam has no intensity");
    const Vec3 pvec = s_boosted.spatial() / s_boosted.s0;
    const double ch = std::cosh(b.beta), sh = std::sinh(b.beta);
    const double w = ch + sh * b.e.dot(pvec);
    return 1.0 - pvec.norm2() - (1.0 - p * p) * w * w;
}

StokesVector mueller_apply(const Matrix4R& l, const StokesVector& s) {
    return StokesVector::from_array(l * s.array());
}

StokesVector mueller_apply(const Matrix4C& l, const StokesVector& s, double tol) {
    Matrix4R lr;
    try {
        lr = real_part_checked(l, tol);
    } catch (const ConstraintError&) {
        throw DomainError("mueller_apply: matrix is not real within tolerance");
    }
    return mueller_apply(lr, s);
}

} // namespace polarkit
