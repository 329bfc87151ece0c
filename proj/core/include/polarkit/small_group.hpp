#pragma once

#include "polarkit/covering.hpp"
#include "polarkit/stokes.hpp"

#include <vector>

namespace polarkit {

/// Stabilizer parametrization of a Stokes vector: free rotation part n,
/// derived m = n x p (p the normalized spatial part), m0 = 0 identically
/// and n0 completing the unit determinant n0^2 + |n|^2 - |m|^2 = 1.
struct StationarySpec {
    double n0 = 1.0;
    Vec3 n{};
    Vec3 m{};

    SpinorParams k() const { return SpinorParams::from_split(n0, 0.0, n, m); }
    double determinant() const { return n0 * n0 + n.norm2() - m.norm2(); }
};

/// Builds the stabilizer spec of S with the given free vector and n0
/// scale, normalized to a unit determinant.  Throws when
/// n0^2 + |n|^2 - |n x p|^2 <= 0.
StationarySpec stationary_spec(const StokesVector& s, const Vec3& n, double scale,
                               double tol = kDefaultTol);

/// Spinor parameters of a stationary-subgroup element of S (the k() of
/// stationary_spec).  Works for time-like and isotropic S alike.
SpinorParams stationary_element(const StokesVector& s, const Vec3& n, double scale,
                                double tol = kDefaultTol);

/// The four free parameters of the transitivity solution family.
struct TransitivityParams {
    double M_plus = 0.0;
    double M_minus = 0.0;
    double N_plus = 0.0;
    double N_minus = 0.0;
};

/// (n0, n, m0, m) assembled from the solution family; k() packs them
/// into spinor parameters.
struct TransitivityAssembly {
    double n0 = 0.0, m0 = 0.0;
    Vec3 n{}, m{};

    SpinorParams k() const { return SpinorParams::from_split(n0, m0, n, m); }
    /// n0*m0 + n.m; vanishes identically for every assembly.
    double orthogonality() const { return n0 * m0 + n.dot(m); }
    /// n0^2 + |n|^2 - m0^2 - |m|^2; equals 1 on the admissible surface.
    double normalization() const {
        return n0 * n0 + n.norm2() - m0 * m0 - m.norm2();
    }
};

/// Raw assembly of the solution family for given parameters (no
/// constraint enforcement).  Requires equal invariants and S0 != S0'.
TransitivityAssembly assemble_transitivity(const StokesVector& s,
                                           const StokesVector& s_prime,
                                           const TransitivityParams& p,
                                           double tol = kDefaultTol);

/// Quadratic form F(S,S'; M+-, N+-) minus 1; zero marks the admissible
/// 3-manifold of transitivity transformations.
double constraint_residual(const StokesVector& s, const StokesVector& s_prime,
                           const TransitivityParams& p, double tol = kDefaultTol);

/// Spinor parameters carrying S to S' for on-surface parameters; throws
/// ConstraintError (with the residual) when the parameters are off the
/// admissible surface, and DomainError for unequal invariants or the
/// non-relativistic case S0 == S0'.
SpinorParams transitivity_general(const StokesVector& s, const StokesVector& s_prime,
                                  const TransitivityParams& p,
                                  double tol = kDefaultTol);

/// Pure-boost member of the family: only M- nonzero, fixed by
/// M-^2 (S0+^2 - |S-|^2) = 1.
TransitivityParams pure_boost_params(const StokesVector& s, const StokesVector& s_prime,
                                     double tol = kDefaultTol);

/// Boost-plus-rotation member: only N+ nonzero, fixed by
/// N+^2 (|S+|^2 - S0-^2) = 1 (the bracket is positive in the
/// relativistic case).
TransitivityParams boost_rotation_params(const StokesVector& s,
                                         const StokesVector& s_prime,
                                         double tol = kDefaultTol);

/// Projects off-surface parameters back onto F = 1 by solving for M-
/// (falling back to N+ when the M- quadratic has no real root), keeping
/// the other three parameters fixed.
TransitivityParams solve_on_surface(const StokesVector& s, const StokesVector& s_prime,
                                    const TransitivityParams& initial,
                                    double tol = kDefaultTol);

/// Rotation solving the non-relativistic problem (S0 == S0', |S| == |S'|):
/// n = alpha (S+S') + n0 (S x S')/(S^2 + S.S'), normalized; alpha moves
/// along the stationary freedom.  alpha = 0 is the geodesic rotation.
SpinorParams transitivity_rotation(const StokesVector& s, const StokesVector& s_prime,
                                   double alpha, double tol = kDefaultTol);

/// Least-squares Mueller fit result.
struct MuellerFit {
    Matrix4R matrix;
    /// Max-entry deviation of L^T g L from g (not enforced, reported).
    double lorentz_deviation = 0.0;
    /// Largest residual |L*S - S'| over the input pairs.
    double max_residual = 0.0;
};

/// Unconstrained least-squares fit of L over >= 4 Stokes pairs; a
/// rank-deficient set of input vectors raises ConstraintError naming
/// the null directions.
MuellerFit fit_mueller(const std::vector<std::pair<StokesVector, StokesVector>>& pairs,
                       double tol = kDefaultTol);

} // namespace polarkit
