#pragma once

#include "polarkit/covering.hpp"

#include <algorithm>

namespace polarkit {

/// Split of an SL(2,C) element into a rotation and a boost factor.
/// The rotation is the real unit quaternion (r0, r) of
/// (r0 - i r.sigma); the boost is the velocity vector B (|B| < 1) of
/// (1 + B.sigma)/sqrt(1 - B^2).
struct PolarDecomposition {
    enum class Order { rotation_boost, boost_rotation };

    double r0 = 1.0;
    Vec3 r{};
    Vec3 velocity{};
    Order order = Order::rotation_boost;

    SpinorMatrix rotation_factor() const;
    SpinorMatrix boost_factor() const;
    /// rotation_factor * boost_factor (or the reverse, per `order`).
    SpinorMatrix product() const;

    /// Angle of the rotation factor in [0, pi].
    double rotation_angle() const {
        const double c = std::clamp(std::abs(r0), 0.0, 1.0);
        return 2.0 * std::acos(c);
    }
};

/// B(k) = R * H with R unitary (rotation) and H positive Hermitian
/// (boost); velocity B = (n0 m - m0 n + m x n)/(n0^2 + |n|^2).
PolarDecomposition polar_rotation_boost(const SpinorParams& k, double tol = kDefaultTol);

/// B(k) = H * R, the opposite order; the cross term flips sign.
PolarDecomposition polar_boost_rotation(const SpinorParams& k, double tol = kDefaultTol);

/// A boost written as the Hermitian spinor matrix b0 + b.sigma with
/// b0^2 - |b|^2 = 1, b0 >= 1.
struct BoostQuat {
    double b0 = 1.0;
    Vec3 b{};

    BoostQuat() = default;
    BoostQuat(double b0_, const Vec3& b_, double tol = kDefaultTol);

    /// From rapidity and axis: (ch(beta/2), sh(beta/2) e).
    static BoostQuat from_rapidity(double beta, const Vec3& e, double tol = kDefaultTol);

    SpinorParams spinor() const { return {b0, b.x, b.y, b.z}; }
};

struct BoostComposition {
    /// Parameters of B(second) * B(first), normalized to unit determinant.
    SpinorParams k;
    /// Rotation-first polar split of k; the rotation part is the Thomas
    /// rotation, its axis along first.b x second.b.
    PolarDecomposition thomas;
};

/// Composes two boosts (applying `first`, then `second`) and extracts
/// the Thomas rotation.  Parallel boosts give the identity rotation.
BoostComposition compose_boosts(const BoostQuat& first, const BoostQuat& second,
                                double tol = kDefaultTol);

} // namespace polarkit
