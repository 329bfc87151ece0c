#pragma once

#include "polarkit/types.hpp"

#include <string>

namespace polarkit {

/// Real unit quaternion (n0, n1, n2, n3) standing for the SU(2) element
/// U = n0 + i n1 s1 + i n2 s2 + i n3 s3.
struct UnitQuaternion {
    double n0 = 1.0, n1 = 0.0, n2 = 0.0, n3 = 0.0;

    double norm2() const { return n0 * n0 + n1 * n1 + n2 * n2 + n3 * n3; }
    UnitQuaternion normalized() const;
    UnitQuaternion operator-() const { return {-n0, -n1, -n2, -n3}; }

    /// Group product in the U = n0 + i n.sigma realization:
    /// (a0, a)(b0, b) = (a0 b0 - a.b, a0 b + b0 a - a x b).
    UnitQuaternion operator*(const UnitQuaternion& o) const;

    double operator[](int i) const {
        return i == 0 ? n0 : (i == 1 ? n1 : (i == 2 ? n2 : n3));
    }

    /// Component-wise distance up to the overall sign of the double cover.
    double dist_up_to_sign(const UnitQuaternion& o) const;
};

/// Single axis rotation U_axis(theta) = cos(theta/2) + i sin(theta/2) s_axis.
UnitQuaternion axis_rotation(int axis, double angle);

/// Three rotation angles of one factorization; `scheme` is the axis
/// string ("121", "313", ... for two-element; "123", "312", ... for
/// three-element).  `degenerate` marks configurations where one angle
/// was free and has been pinned by convention.
struct FactorAngles {
    double a = 0.0, b = 0.0, c = 0.0;
    std::string scheme;
    bool degenerate = false;
};

/// Euler-type factorization U = U_p(a) U_q(b) U_p(c) for the six schemes
/// {"121","212","131","313","232","323"}.  b lies in [0, pi]; a and c in
/// (-pi, pi].  Degenerate inputs (pure middle-axis or pure outer-axis
/// rotations) pin the free angle to 0 and set the flag.
FactorAngles factor_2element(const UnitQuaternion& n, const std::string& scheme,
                             double tol = kDefaultTol);

/// Three-axis factorization U = U_p(a) U_q(b) U_r(c) for the six orders
/// {"123","132","231","213","312","321"}.  b lies in [-pi/2, pi/2]; at
/// the gimbal configuration |sin b| = 1 the convention c = 0 is adopted
/// and the flag set.
FactorAngles factor_3element(const UnitQuaternion& n, const std::string& order,
                             double tol = kDefaultTol);

/// Rebuild the quaternion from factor angles (the reconstruction oracle
/// for both factorizations).
UnitQuaternion compose_axis_rotations(const FactorAngles& f);

} // namespace polarkit
