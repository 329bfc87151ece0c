#pragma once

#include "polarkit/types.hpp"

namespace polarkit {

/// Real Stokes 4-vector (S0, S1, S2, S3).  The checked factory enforces
/// the physical-light constraints S0 >= 0 and p <= 1; raw vectors from
/// intermediate Lorentz algebra use the plain constructor.
struct StokesVector {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;

    static StokesVector physical(double s0, double s1, double s2, double s3,
                                 double tol = kDefaultTol);

    Vec3 spatial() const { return {s1, s2, s3}; }
    double intensity() const { return s0; }

    /// Degree of polarization |S|/S0; S0 below tolerance is an error.
    double degree(double tol = kDefaultTol) const;

    /// Minkowski square S0^2 - |S|^2 (zero for completely polarized light).
    double minkowski() const { return s0 * s0 - spatial().norm2(); }

    bool isotropic(double tol = kDefaultTol) const {
        const double scale = std::max(1.0, s0 * s0);
        return std::abs(minkowski()) <= tol * scale;
    }

    StokesVector operator+(const StokesVector& o) const {
        return {s0 + o.s0, s1 + o.s1, s2 + o.s2, s3 + o.s3};
    }
    StokesVector operator-(const StokesVector& o) const {
        return {s0 - o.s0, s1 - o.s1, s2 - o.s2, s3 - o.s3};
    }
    StokesVector operator*(double f) const { return {s0 * f, s1 * f, s2 * f, s3 * f}; }

    double max_abs_diff(const StokesVector& o) const {
        return std::max(std::max(std::abs(s0 - o.s0), std::abs(s1 - o.s1)),
                        std::max(std::abs(s2 - o.s2), std::abs(s3 - o.s3)));
    }

    std::array<double, 4> array() const { return {s0, s1, s2, s3}; }
    static StokesVector from_array(const std::array<double, 4>& a) {
        return {a[0], a[1], a[2], a[3]};
    }
};

/// Plane-wave amplitudes N, M and phase shift Delta of the two
/// transverse electric components.
struct WaveParams {
    double N = 0.0;
    double M = 0.0;
    double Delta = 0.0;

    WaveParams() = default;
    WaveParams(double n, double m, double delta);
};

/// Rapidity and unit axis of a boost (optically: a partial polarizer).
struct BoostSpec {
    double beta = 0.0;
    Vec3 e{0.0, 0.0, 1.0};

    BoostSpec() = default;
    BoostSpec(double b, const Vec3& axis, double tol = kDefaultTol);
};

/// Stokes parameters of a fully coherent plane wave:
/// (N^2+M^2, 2NM cos D, 2NM sin D, N^2-M^2); always isotropic.
StokesVector stokes_from_wave(const WaveParams& w);

/// Incoherent sum of a completely polarized beam and natural light of
/// intensity i_natural.
StokesVector mix_with_natural(const StokesVector& polarized, double i_natural,
                              double tol = kDefaultTol);

/// Closed-form boost action on a Stokes vector:
/// I' = I (ch b - sh b e.p), p' per the standard quotient.
StokesVector boost_stokes(const StokesVector& s, const BoostSpec& b);

/// Boost carrying a partly polarized beam (0 < p < 1) to natural light:
/// axis along the polarization direction, rapidity artanh p.  p above
/// 1 - tol has no rest frame (isotropic vector) and is an error.
BoostSpec rest_frame(const StokesVector& s, double tol = kDefaultTol);

/// Residual of the boosted-degree ellipsoid equation:
/// 1 - p'^2 - (1-p^2)(ch b + sh b e.p')^2, evaluated at the boosted
/// vector; vanishes whenever s_boosted arose by boosting a degree-p beam.
double ellipsoid_residual(double p, const StokesVector& s_boosted, const BoostSpec& b);

/// Componentwise Mueller action L*S; the complex overload requires L to
/// be real within tolerance.
StokesVector mueller_apply(const Matrix4R& l, const StokesVector& s);
StokesVector mueller_apply(const Matrix4C& l, const StokesVector& s,
                           double tol = kDefaultTol);

} // namespace polarkit
