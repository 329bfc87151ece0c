#include "polarkit/su2_factor.hpp"

#include <algorithm>

namespace polarkit {

UnitQuaternion UnitQuaternion::normalized() const {
    const double n = std::sqrt(norm2());
    if (n < 1e-12) throw DomainError("UnitQuaternion: zero quaternion");
    return {n0 / n, n1 / n, n2 / n, n3 / n};
}

UnitQuaternion UnitQuaternion::operator*(const UnitQuaternion& o) const {
    const Vec3 a{n1, n2, n3}, b{o.n1, o.n2, o.n3};
    const Vec3 v = n0 * b + o.n0 * a - a.cross(b);
    return {n0 * o.n0 - a.dot(b), v.x, v.y, v.z};
}

double UnitQuaternion::dist_up_to_sign(const UnitQuaternion& o) const {
    double dp = 0.0, dm = 0.0;
    for (int i = 0; i < 4; ++i) {
        dp = std::max(dp, std::abs((*this)[i] - o[i]));
        dm = std::max(dm, std::abs((*this)[i] + o[i]));
    }
    return std::min(dp, dm);
}

UnitQuaternion axis_rotation(int axis, double angle) {
    if (axis < 1 || axis > 3) throw DomainError("axis_rotation: axis must be 1..3");
    UnitQuaternion q;
    q.n0 = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    if (axis == 1) q.n1 = s;
    else if (axis == 2) q.n2 = s;
    else q.n3 = s;
    return q;
}

namespace {

struct Relabeled {
    double n0, n1, n2, n3;
    bool flip_first;  // negate the first angle after the base solve
};

// Base problem variables for each two-element scheme: solve the
// U1(a) U2(b) U1(c) equations in the permuted components.
Relabeled relabel_2element(const UnitQuaternion& q, const std::string& scheme) {
    if (scheme == "121") return {q.n0, q.n1, q.n2, q.n3, false};
    if (scheme == "212") return {q.n0, q.n2, q.n1, -q.n3, false};
    if (scheme == "131") return {q.n0, q.n1, q.n3, -q.n2, false};
    if (scheme == "313") return {q.n0, q.n3, q.n1, q.n2, false};
    if (scheme == "232") return {q.n0, q.n2, q.n3, q.n1, false};
    if (scheme == "323") return {q.n0, q.n3, q.n2, -q.n1, false};
    throw DomainError("factor_2element: unknown scheme '" + scheme + "'");
}

// Base problem variables for each three-element order.  Odd
// permutations carry a sign flip that lands on the first angle.
Relabeled relabel_3element(const UnitQuaternion& q, const std::string& order) {
    if (order == "123") return {q.n0, q.n1, q.n2, q.n3, false};
    if (order == "132") return {q.n0, -q.n1, q.n3, q.n2, true};
    if (order == "231") return {q.n0, q.n2, q.n3, q.n1, false};
    if (order == "213") return {q.n0, -q.n2, q.n1, q.n3, true};
    if (order == "312") return {q.n0, q.n3, q.n1, q.n2, false};
    if (order == "321") return {q.n0, -q.n3, q.n2, q.n1, true};
    throw DomainError("factor_3element: unknown order '" + order + "'");
}

} // namespace

FactorAngles factor_2element(const UnitQuaternion& n, const std::string& scheme,
                             double tol) {
    const UnitQuaternion q = n.normalized();
    const Relabeled t = relabel_2element(q, scheme);

    FactorAngles f;
    f.scheme = scheme;

    const double r01 = std::sqrt(t.n0 * t.n0 + t.n1 * t.n1);
    const double r23 = std::sqrt(t.n2 * t.n2 + t.n3 * t.n3);
    const double denom = r01 * r23;

    if (denom <= tol) {
        f.degenerate = true;
        if (r23 <= r01) {
            // pure outer-axis rotation: U = U_p(a), b = 0
            f.a = 2.0 * std::atan2(t.n1, t.n0);
            f.b = 0.0;
            f.c = 0.0;
        } else {
            // pure middle-axis complement: b = pi, a pinned to 0
            f.a = 0.0;
            f.b = M_PI;
            f.c = 2.0 * std::atan2(t.n3, t.n2);
        }
        return f;
    }

    // middle angle: cos b = n0^2+n1^2-n2^2-n3^2, sin b = 2 r01 r23 >= 0
    f.b = std::atan2(2.0 * denom, t.n0 * t.n0 + t.n1 * t.n1 - t.n2 * t.n2 - t.n3 * t.n3);
    // outer angles
    f.a = std::atan2(t.n1 * t.n2 - t.n0 * t.n3, t.n0 * t.n2 + t.n1 * t.n3);
    f.c = std::atan2(t.n0 * t.n3 + t.n1 * t.n2, t.n0 * t.n2 - t.n1 * t.n3);
    return f;
}

FactorAngles factor_3element(const UnitQuaternion& n, const std::string& order,
                             double tol) {
    const UnitQuaternion q = n.normalized();
    const Relabeled t = relabel_3element(q, order);

    FactorAngles f;
    f.scheme = order;

    const double sb = 2.0 * (t.n0 * t.n2 - t.n1 * t.n3);
    const double ca_n = t.n0 * t.n0 + t.n3 * t.n3 - t.n1 * t.n1 - t.n2 * t.n2;
    const double sa_n = 2.0 * (t.n2 * t.n3 + t.n0 * t.n1);
    const double cb = std::sqrt(std::max(0.0, ca_n * ca_n + sa_n * sa_n));

    if (cb <= tol) {
        // gimbal configuration: only a -/+ c determined; pin c = 0, then
        // U = U_p(a) U_q(+-pi/2) gives n0 = cos(a/2) cos(b/2), n1' = sin(a/2) cos(b/2)
        f.degenerate = true;
        f.b = (sb >= 0.0) ? M_PI / 2.0 : -M_PI / 2.0;
        f.a = 2.0 * std::atan2(t.n1, t.n0);
        f.c = 0.0;
    } else {
        f.b = std::atan2(sb, cb);
        f.a = std::atan2(sa_n, ca_n);
        const double cc_n = t.n0 * t.n0 - t.n3 * t.n3 + t.n1 * t.n1 - t.n2 * t.n2;
        const double sc_n = 2.0 * (t.n0 * t.n3 + t.n1 * t.n2);
        f.c = std::atan2(sc_n, cc_n);
    }

    if (t.flip_first) f.a = -f.a;
    return f;
}

UnitQuaternion compose_axis_rotations(const FactorAngles& f) {
    if (f.scheme.size() != 3) throw DomainError("compose_axis_rotations: bad scheme");
    const int p = f.scheme[0] - '0', q = f.scheme[1] - '0', r = f.scheme[2] - '0';
    if (p < 1 || p > 3 || q < 1 || q > 3 || r < 1 || r > 3)
        throw DomainError("compose_axis_rotations: bad scheme");
    return axis_rotation(p, f.a) * axis_rotation(q, f.b) * axis_rotation(r, f.c);
}

} // namespace polarkit
