#include "polarkit/small_group.hpp"

#include <algorithm>
#include <sstream>

namespace polarkit {

StationarySpec stationary_spec(const StokesVector& s, const Vec3& n, double scale,
                               double tol) {
    if (s.s0 <= 0.0) throw DomainError("stationary_element: S0 must be positive");
    const Vec3 p = s.spatial() / s.s0;
    StationarySpec spec{scale, n, n.cross(p)};
    const double det = spec.determinant();
    if (det <= tol)
        throw ConstraintError("stationary_element: no unit-determinant element "
                              "(n0^2 + |n|^2 - |n x p|^2 <= 0)", det);
    const double f = 1.0 / std::sqrt(det);
    return {spec.n0 * f, spec.n * f, spec.m * f};
}

SpinorParams stationary_element(const StokesVector& s, const Vec3& n, double scale,
                                double tol) {
    return stationary_spec(s, n, scale, tol).k();
}

namespace {

struct PairGeometry {
    double s0p, s0m;          // S0+ and S0-
    Vec3 sp, sm;              // S+ and S-
    double spp, smm, spm;     // S+.S+, S-.S-, S+.S-
};

PairGeometry geometry(const StokesVector& s, const StokesVector& s_prime) {
    PairGeometry g;
    g.s0p = s.s0 + s_prime.s0;
    g.s0m = s.s0 - s_prime.s0;
    g.sp = s.spatial() + s_prime.spatial();
    g.sm = s.spatial() - s_prime.spatial();
    g.spp = g.sp.dot(g.sp);
    g.smm = g.sm.dot(g.sm);
    g.spm = g.sp.dot(g.sm);
    return g;
}

void require_relativistic(const StokesVector& s, const StokesVector& s_prime,
                          double tol, const char* who) {
    const double scale = std::max({1.0, s.s0 * s.s0, s_prime.s0 * s_prime.s0});
    if (std::abs(s.minkowski() - s_prime.minkowski()) > tol * scale)
        throw DomainError(std::string(who) + ": Stokes vectors have unequal invariants");
    if (std::abs(s.s0 - s_prime.s0) <= tol * std::max(1.0, std::abs(s.s0)))
        throw DomainError(std::string(who) +
                          ": S0 == S0' is the non-relativistic case, use "
                          "transitivity_rotation");
}

} // namespace

TransitivityAssembly assemble_transitivity(const StokesVector& s,
                                           const StokesVector& s_prime,
                                           const TransitivityParams& p, double tol) {
    require_relativistic(s, s_prime, tol, "assemble_transitivity");
    const PairGeometry g = geometry(s, s_prime);
    const Vec3 smxsp = g.sm.cross(g.sp);

    TransitivityAssembly a;
    a.n = p.N_plus * g.sp + p.N_minus * g.sm + (p.M_plus / g.s0m) * smxsp;
    a.m = p.M_plus * g.sp + p.M_minus * g.sm + (p.N_minus / g.s0p) * smxsp;
    a.n0 = (p.M_plus * g.spp + p.M_minus * g.spm) / g.s0m;
    a.m0 = -(p.N_plus * g.spm + p.N_minus * g.smm) / g.s0p;
    return a;
}

namespace {

// Coefficients of F = qm(M) - qn(N) as two quadratic forms:
//   qm = cm_pp M+^2 + 2 cm_pm M+ M- + cm_mm M-^2
//   qn = cn_mm N-^2 + 2 cn_pm N+ N- + cn_pp N+^2
struct SurfaceQuadratic {
    double cm_pp, cm_pm, cm_mm;
    double cn_mm, cn_pm, cn_pp;
};

SurfaceQuadratic surface_quadratic(const PairGeometry& g) {
    SurfaceQuadratic q;
    q.cm_pp = g.spp * g.spp / (g.s0m * g.s0m) - g.s0p * g.s0p +
              g.spp * g.smm / (g.s0m * g.s0m) - g.spp;
    q.cm_pm = g.s0p * g.spp / g.s0m - g.s0p * g.s0m;
    q.cm_mm = g.s0p * g.s0p - g.smm;
    q.cn_mm = g.smm * g.smm / (g.s0p * g.s0p) - g.s0m * g.s0m +
              g.spp * g.smm / (g.s0p * g.s0p) - g.smm;
    q.cn_pm = g.s0m * g.smm / g.s0p - g.s0p * g.s0m;
    q.cn_pp = g.s0m * g.s0m - g.spp;
    return q;
}

double surface_value(const SurfaceQuadratic& q, const TransitivityParams& p) {
    const double qm = q.cm_pp * p.M_plus * p.M_plus +
                      2.0 * q.cm_pm * p.M_plus * p.M_minus +
                      q.cm_mm * p.M_minus * p.M_minus;
    const double qn = q.cn_mm * p.N_minus * p.N_minus +
                      2.0 * q.cn_pm * p.N_plus * p.N_minus +
                      q.cn_pp * p.N_plus * p.N_plus;
    return qm - qn;
}

} // namespace

double constraint_residual(const StokesVector& s, const StokesVector& s_prime,
                           const TransitivityParams& p, double tol) {
    require_relativistic(s, s_prime, tol, "constraint_residual");
    return surface_value(surface_quadratic(geometry(s, s_prime)), p) - 1.0;
}

SpinorParams transitivity_general(const StokesVector& s, const StokesVector& s_prime,
                                  const TransitivityParams& p, double tol) {
    const double res = constraint_residual(s, s_prime, p, tol);
    const double scale = std::max(1.0, s.s0 * s.s0);
    if (std::abs(res) > std::sqrt(tol) * scale)
        throw ConstraintError("transitivity_general: parameters off the admissible "
                              "surface F = 1", res);
    const TransitivityAssembly a = assemble_transitivity(s, s_prime, p, tol);
    return a.k().normalized(tol);
}

TransitivityParams pure_boost_params(const StokesVector& s,
                                     const StokesVector& s_prime, double tol) {
    require_relativistic(s, s_prime, tol, "pure_boost_params");
    const PairGeometry g = geometry(s, s_prime);
    const double denom = g.s0p * g.s0p - g.smm;
    if (denom <= tol)
        throw ConstraintError("pure_boost_params: S0+^2 - |S-|^2 must be positive",
                              denom);
    TransitivityParams p;
    p.M_minus = 1.0 / std::sqrt(denom);
    return p;
}

TransitivityParams boost_rotation_params(const StokesVector& s,
                                         const StokesVector& s_prime, double tol) {
    require_relativistic(s, s_prime, tol, "boost_rotation_params");
    const PairGeometry g = geometry(s, s_prime);
    const double denom = g.spp - g.s0m * g.s0m;
    if (denom <= tol)
        throw ConstraintError("boost_rotation_params: |S+|^2 - S0-^2 must be positive",
                              denom);
    TransitivityParams p;
    p.N_plus = 1.0 / std::sqrt(denom);
    return p;
}

TransitivityParams solve_on_surface(const StokesVector& s, const StokesVector& s_prime,
                                    const TransitivityParams& initial, double tol) {
    require_relativistic(s, s_prime, tol, "solve_on_surface");
    const SurfaceQuadratic q = surface_quadratic(geometry(s, s_prime));

    // F is quadratic in M- at fixed (M+, N+, N-):
    //   cm_mm M-^2 + 2 cm_pm M+ M- + (rest) = 1
    auto quad_root = [](double a2, double a1, double a0, double target,
                        double near_to, double* out) {
        // a2 x^2 + a1 x + a0 = target
        const double c = a0 - target;
        if (std::abs(a2) < 1e-14) {
            if (std::abs(a1) < 1e-14) return false;
            *out = -c / a1;
            return true;
        }
        const double disc = a1 * a1 - 4.0 * a2 * c;
        if (disc < 0.0) return false;
        const double sq = std::sqrt(disc);
        const double r1 = (-a1 + sq) / (2.0 * a2);
        const double r2 = (-a1 - sq) / (2.0 * a2);
        *out = (std::abs(r1 - near_to) <= std::abs(r2 - near_to)) ? r1 : r2;
        return true;
    };

    TransitivityParams p = initial;
    {
        const double rest = q.cm_pp * p.M_plus * p.M_plus -
                            (q.cn_mm * p.N_minus * p.N_minus +
                             2.0 * q.cn_pm * p.N_plus * p.N_minus +
                             q.cn_pp * p.N_plus * p.N_plus);
        double root;
        if (quad_root(q.cm_mm, 2.0 * q.cm_pm * p.M_plus, rest, 1.0, p.M_minus, &root)) {
            p.M_minus = root;
            return p;
        }
    }
    {
        // fall back to N+ with M- fixed at its initial value
        const double rest = q.cm_pp * p.M_plus * p.M_plus +
                            2.0 * q.cm_pm * p.M_plus * p.M_minus +
                            q.cm_mm * p.M_minus * p.M_minus -
                            q.cn_mm * p.N_minus * p.N_minus;
        double root;
        if (quad_root(-q.cn_pp, -2.0 * q.cn_pm * p.N_minus, rest, 1.0, p.N_plus, &root)) {
            p.N_plus = root;
            return p;
        }
    }
    throw ConstraintError("solve_on_surface: no real root in M- or N+ from the "
                          "given starting point");
}

SpinorParams transitivity_rotation(const StokesVector& s, const StokesVector& s_prime,
                                   double alpha, double tol) {
    const double scale = std::max(1.0, std::abs(s.s0));
    if (std::abs(s.s0 - s_prime.s0) > tol * scale)
        throw DomainError("transitivity_rotation: requires S0 == S0'");
    const Vec3 sv = s.spatial(), sv2 = s_prime.spatial();
    if (std::abs(sv.norm() - sv2.norm()) > tol * std::max(1.0, sv.norm()))
        throw DomainError("transitivity_rotation: requires |S| == |S'|");

    const double denom = sv.norm2() + sv.dot(sv2);
    if (std::abs(denom) <= tol * std::max(1.0, sv.norm2()))
        throw ConstraintError("transitivity_rotation: antipodal vectors, "
                              "S.S' = -S^2", denom);

    const Vec3 fixed_part = alpha * (sv + sv2);
    const Vec3 n0_part = sv.cross(sv2) / denom;  // multiplies n0
    // Unit normalization n0^2 (1 + |n0_part|^2) = 1 - |fixed_part|^2
    // (the two parts are orthogonal).
    const double rhs = 1.0 - fixed_part.norm2();
    if (rhs <= tol)
        throw DomainError("transitivity_rotation: alpha too large for a unit rotation");
    const double n0 = std::sqrt(rhs / (1.0 + n0_part.norm2()));
    const Vec3 n = fixed_part + n0 * n0_part;
    return SpinorParams::from_split(n0, 0.0, n, Vec3{});
}

MuellerFit fit_mueller(const std::vector<std::pair<StokesVector, StokesVector>>& pairs,
                       double tol) {
    if (pairs.size() < 4)
        throw ConstraintError("fit_mueller: need at least 4 Stokes pairs, got " +
                              std::to_string(pairs.size()));
    for (const auto& [a, b] : pairs) {
        const double scale = std::max({1.0, a.s0 * a.s0, b.s0 * b.s0});
        if (std::abs(a.minkowski() - b.minkowski()) > std::sqrt(tol) * scale)
            throw DomainError("fit_mueller: pair with unequal invariants");
    }

    // Normal matrix G = sum S S^T, shared by the four rows of L.
    double a[4][4] = {};
    for (const auto& [sa, sb] : pairs) {
        (void)sb;
        const auto va = sa.array();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a[i][j] += va[i] * va[j];
    }

    // Jacobi eigen-decomposition of the symmetric PSD normal matrix.
    double v[4][4] = {};
    for (int i = 0; i < 4; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a[p][q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = cs * akp - sn * akq;
                    a[k][q] = sn * akp + cs * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = cs * apk - sn * aqk;
                    a[q][k] = sn * apk + cs * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = cs * vkp - sn * vkq;
                    v[k][q] = sn * vkp + cs * vkq;
                }
            }
    }
    double eig[4], emax = 0.0;
    for (int i = 0; i < 4; ++i) {
        eig[i] = a[i][i];
        emax = std::max(emax, eig[i]);
    }

    std::vector<int> null_dirs;
    for (int i = 0; i < 4; ++i)
        if (eig[i] <= std::sqrt(tol) * std::max(1.0, emax)) null_dirs.push_back(i);
    if (!null_dirs.empty()) {
        std::ostringstream os;
        os << "fit_mueller: under-determined pair set; null directions:";
        for (int i : null_dirs) {
            os << " [";
            for (int k = 0; k < 4; ++k) os << (k ? "," : "") << v[k][i];
            os << "]";
        }
        throw ConstraintError(os.str());
    }

    // Pseudo-inverse application: row r of L solves G x = sum S'_r S.
    MuellerFit fit;
    for (int r = 0; r < 4; ++r) {
        double rhs[4] = {};
        for (const auto& [sa, sb] : pairs) {
            const auto va = sa.array();
            const double target = sb.array()[r];
            for (int i = 0; i < 4; ++i) rhs[i] += target * va[i];
        }
        // x = V diag(1/eig) V^T rhs
        double tmp[4] = {}, x[4] = {};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) tmp[i] += v[k][i] * rhs[k];
        for (int i = 0; i < 4; ++i) tmp[i] /= eig[i];
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i) x[k] += v[k][i] * tmp[i];
        for (int j = 0; j < 4; ++j) fit.matrix(r, j) = x[j];
    }

    fit.lorentz_deviation = fit.matrix.lorentz_defect();
    for (const auto& [sa, sb] : pairs) {
        const StokesVector out = mueller_apply(fit.matrix, sa);
        fit.max_residual = std::max(fit.max_residual, out.max_abs_diff(sb));
    }
    return fit;
}

} // namespace polarkit
