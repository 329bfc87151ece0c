#include <doctest.h>

#include "test_util.hpp"

using namespace polarkit;
using pktest::Rng;

TEST_CASE("wave parameters map to the standard Stokes components") {
    const StokesVector s1 = stokes_from_wave(WaveParams(1.0, 0.0, 0.0));
    CHECK(s1.max_abs_diff({1, 0, 0, 1}) == 0.0);
    const StokesVector s2 = stokes_from_wave(WaveParams(1.0, 1.0, 0.0));
    CHECK(s2.max_abs_diff({2, 2, 0, 0}) < 1e-15);
    const StokesVector s3 = stokes_from_wave(WaveParams(1.0, 1.0, M_PI / 2.0));
    CHECK(s3.max_abs_diff({2, 0, 2, 0}) < 1e-15);

    Rng rng(401);
    for (int t = 0; t < 100; ++t) {
        const WaveParams w(std::abs(rng.uniform()), std::abs(rng.uniform()),
                           rng.uniform(-M_PI, M_PI));
        CHECK(std::abs(stokes_from_wave(w).minkowski()) < 1e-14);
    }
    CHECK_THROWS_AS(WaveParams(-1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("physical constructor enforces the degree bound") {
    CHECK_NOTHROW(StokesVector::physical(1.0, 0.5, 0.0, 0.0));
    CHECK_THROWS_AS(StokesVector::physical(1.0, 1.5, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(StokesVector::physical(-1.0, 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS((StokesVector{0.0, 0.0, 0.0, 0.0}).degree(), DomainError);
}

TEST_CASE("mixing with natural light dilutes the degree") {
    const StokesVector pol{1, 0, 0, 1};
    const StokesVector mixed = mix_with_natural(pol, 1.0);
    CHECK(mixed.max_abs_diff({2, 0, 0, 1}) == 0.0);
    CHECK(mixed.degree() == doctest::Approx(0.5));
    CHECK(mixed.minkowski() ==
          doctest::Approx(mixed.s0 * mixed.s0 * (1.0 - 0.25)).epsilon(1e-14));

    CHECK(mix_with_natural(pol, 0.0).max_abs_diff(pol) == 0.0);
    CHECK_THROWS_AS(mix_with_natural(pol, -1.0), DomainError);
    CHECK_THROWS_AS(mix_with_natural({2, 0, 0, 1}, 1.0), DomainError);  // not isotropic
}

TEST_CASE("boost closed form: orthogonal, parallel and zero cases") {
    const double beta = 0.8;
    // e.p = 0
    const StokesVector s{1.0, 0.6, 0.0, 0.0};
    const StokesVector b1 = boost_stokes(s, BoostSpec(beta, {0, 0, 1}));
    CHECK(b1.s0 == doctest::Approx(std::cosh(beta)).epsilon(1e-14));
    CHECK(b1.s1 == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(b1.s3 == doctest::Approx(-std::sinh(beta)).epsilon(1e-14));

    // completely polarized along the axis: pure rescale by e^-beta
    const StokesVector pol{1, 0, 0, 1};
    const StokesVector b2 = boost_stokes(pol, BoostSpec(beta, {0, 0, 1}));
    CHECK(b2.s0 == doctest::Approx(std::exp(-beta)).epsilon(1e-13));
    CHECK(b2.degree() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(b2.s3 / b2.s0 == doctest::Approx(1.0).epsilon(1e-13));

    CHECK(boost_stokes(s, BoostSpec(0.0, {0, 0, 1})).max_abs_diff(s) == 0.0);
}

TEST_CASE("boost component path equals the Mueller matrix path") {
    Rng rng(402);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const StokesVector s = rng.stokes(rng.uniform(0.0, 1.0));
        const Vec3 e = rng.unit_vec3();
        const double beta = rng.uniform();
        const StokesVector direct = boost_stokes(s, BoostSpec(beta, e));
        const StokesVector via_l = mueller_apply(covering_map(boost(beta, e)), s);
        worst = std::max(worst, direct.max_abs_diff(via_l));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("invariant is conserved and the degree stays physical") {
    Rng rng(403);
    double worst = 0.0;
    for (int t = 0; t < 300; ++t) {
        const double p = (t % 2) ? 0.6 : 1.0;
        const StokesVector s = rng.stokes(p);
        const StokesVector out = mueller_apply(rng.lorentz(), s);
        const double scale = std::max(1.0, s.s0 * s.s0);
        worst = std::max(worst, std::abs(out.minkowski() - s.minkowski()) / scale);
        CHECK(out.degree() <= 1.0 + 1e-12);
        if (p == 1.0) CHECK(out.degree() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("rotations leave intensity and spatial norm unchanged") {
    Rng rng(404);
    for (int t = 0; t < 50; ++t) {
        const StokesVector s = rng.stokes(0.7);
        const Matrix4R l = covering_map(rotation(rng.uniform(-M_PI, M_PI), rng.unit_vec3()));
        const StokesVector out = mueller_apply(l, s);
        CHECK(out.s0 == doctest::Approx(s.s0).epsilon(1e-12));
        CHECK(out.spatial().norm() == doctest::Approx(s.spatial().norm()).epsilon(1e-12));
    }
}

TEST_CASE("rest frame flattens a partly polarized beam") {
    const StokesVector s{2, 0, 0, 1};
    const BoostSpec b = rest_frame(s);
    CHECK(b.beta == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
    const StokesVector r = boost_stokes(s, b);
    CHECK(r.degree() < 1e-12);
    CHECK(r.s0 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));

    CHECK(rest_frame({1, 0, 0, 0}).beta == 0.0);
    CHECK_THROWS_AS(rest_frame({1, 0, 0, 1}), ConstraintError);
}

TEST_CASE("ellipsoid residual vanishes along boosted degree surfaces") {
    Rng rng(405);
    double worst = 0.0;
    for (double p : {0.2, 0.6, 0.9})
        for (double beta : {0.5, 1.5}) {
            const BoostSpec b(beta, {0, 0, 1});
            for (int t = 0; t < 100; ++t) {
                const Vec3 n = rng.unit_vec3();
                const StokesVector s{1.0, p * n.x, p * n.y, p * n.z};
                const StokesVector out = boost_stokes(s, b);
                worst = std::max(worst, std::abs(ellipsoid_residual(p, out, b)));
            }
        }
    CHECK(worst < 1e-10);

    // completely polarized: p' stays 1, residual collapses to 1 - p'^2
    const BoostSpec b(1.0, {0, 0, 1});
    const StokesVector pol{1, 0, 0, 1};
    CHECK(std::abs(ellipsoid_residual(1.0, boost_stokes(pol, b), b)) < 1e-12);
}

TEST_CASE("axis-aligned boosted degrees satisfy the centered ellipsoid form") {
    Rng rng(406);
    const double p = 0.6, beta = 1.2;
    const BoostSpec b(beta, {0, 0, 1});
    const double ch = std::cosh(beta), sh = std::sinh(beta);
    const double axis_coeff = ch * ch - p * p * sh * sh;
    const double gamma = (1.0 - p * p) * sh * ch / axis_coeff;
    const double rhs = p * p * ch * ch - sh * sh +
                       std::pow((1.0 - p * p) * sh * ch, 2) / axis_coeff;
    for (int t = 0; t < 100; ++t) {
        const Vec3 n = rng.unit_vec3();
        const StokesVector s{1.0, p * n.x, p * n.y, p * n.z};
        const StokesVector out = boost_stokes(s, b);
        const Vec3 pv = out.spatial() / out.s0;
        const double lhs = pv.x * pv.x + pv.y * pv.y +
                           axis_coeff * (pv.z + gamma) * (pv.z + gamma);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("mueller_apply validates realness") {
    Matrix4C l = Matrix4C::identity();
    l(0, 0) = Complex(1.0, 0.5);
    CHECK_THROWS_AS(mueller_apply(l, StokesVector{1, 0, 0, 0}), DomainError);
    CHECK(mueller_apply(Matrix4C::identity(), StokesVector{1, 0, 0, 1})
              .max_abs_diff({1, 0, 0, 1}) == 0.0);
}
