#include <doctest.h>

#include "test_util.hpp"

using namespace polarkit;
using pktest::Rng;

TEST_CASE("spinor matrix entries and determinant") {
    Rng rng(201);
    const SpinorParams k{rng.complex_unit_box(), rng.complex_unit_box(),
                         rng.complex_unit_box(), rng.complex_unit_box()};
    const SpinorMatrix b = spinor_matrix(k);
    CHECK(std::abs(b.a - (k.k0 + k.k3)) == 0.0);
    CHECK(std::abs(b.b - (k.k0 - k.k3)) == 0.0);
    CHECK(std::abs(b.c - (k.k1 + Complex(0, 1) * k.k2)) == 0.0);
    CHECK(std::abs(b.d - (k.k1 - Complex(0, 1) * k.k2)) == 0.0);
    CHECK(std::abs(b.det() - k.det()) < 1e-14);

    CHECK(spinor_matrix(SpinorParams::one()).max_abs_diff(SpinorMatrix::identity()) == 0.0);

    // boost and rotation along axis 3 are diagonal
    const double beta = 0.8, phi = 1.1;
    const SpinorMatrix bb = spinor_matrix(boost(beta, {0, 0, 1}));
    CHECK(std::abs(bb.a - std::exp(beta / 2.0)) < 1e-14);
    CHECK(std::abs(bb.b - std::exp(-beta / 2.0)) < 1e-14);
    CHECK(std::abs(bb.c) == 0.0);
    const SpinorMatrix br = spinor_matrix(rotation(phi, {0, 0, 1}));
    CHECK(std::abs(br.a - std::exp(Complex(0, -phi / 2.0))) < 1e-14);
    CHECK(std::abs(br.b - std::exp(Complex(0, phi / 2.0))) < 1e-14);
}

TEST_CASE("real split of spinor parameters roundtrips bitwise") {
    Rng rng(202);
    for (int t = 0; t < 50; ++t) {
        const SpinorParams k{rng.complex_unit_box(), rng.complex_unit_box(),
                             rng.complex_unit_box(), rng.complex_unit_box()};
        const SpinorParams back = SpinorParams::from_split(k.n0(), k.m0(), k.n(), k.m());
        CHECK(back.k0 == k.k0);
        CHECK(back.k1 == k.k1);
        CHECK(back.k2 == k.k2);
        CHECK(back.k3 == k.k3);
    }
}

TEST_CASE("covering map of identity and of an axis boost") {
    CHECK(covering_map(SpinorParams::one()).max_abs_diff(Matrix4R::identity()) == 0.0);

    const double beta = 0.9;
    const Matrix4R l = covering_map(boost(beta, {0, 0, 1}));
    CHECK(l(0, 0) == doctest::Approx(std::cosh(beta)).epsilon(1e-14));
    CHECK(l(0, 3) == doctest::Approx(-std::sinh(beta)).epsilon(1e-14));
    CHECK(l(3, 0) == doctest::Approx(-std::sinh(beta)).epsilon(1e-14));
    CHECK(l(1, 1) == doctest::Approx(1.0));
    CHECK(l(1, 2) == doctest::Approx(0.0));
}

TEST_CASE("covering map ignores the double-cover sign") {
    Rng rng(203);
    for (int t = 0; t < 50; ++t) {
        const SpinorParams k = rng.unit_spinor();
        CHECK(covering_map(k).max_abs_diff(covering_map(-k)) < 1e-12);
    }
}

TEST_CASE("covering map rejects far-from-unimodular input, renormalizes drift") {
    const SpinorParams bad{2.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(covering_map(bad), ConstraintError);
    const SpinorParams drift{1.0 + 5e-8, 0.0, 0.0, 0.0};
    CHECK(covering_map(drift).max_abs_diff(Matrix4R::identity()) < 1e-7);
}

TEST_CASE("a_hat commutes with its conjugate and factorizes the covering") {
    Rng rng(204);
    for (int t = 0; t < 50; ++t) {
        const SpinorParams k = rng.unit_spinor();
        const Matrix4C ah = a_hat(k), ahc = ah.conj();
        CHECK((ah * ahc).max_abs_diff(ahc * ah) < 1e-13);
        CHECK(real_part_checked(ah * ahc, 1e-9).max_abs_diff(covering_map(k)) < 1e-13);
    }
    CHECK(a_hat(SpinorParams::one()).max_abs_diff(Matrix4C::identity()) == 0.0);
    // real parameters give a real matrix with the displayed pattern
    const SpinorParams real_k{0.3, 0.5, -0.2, 0.7};
    const Matrix4C ah = a_hat(real_k);
    CHECK(ah(0, 0) == Complex(0.3));
    CHECK(ah(0, 1) == Complex(-0.5));
    CHECK(ah(1, 2) == Complex(0.0, -0.7));
    CHECK(ah(2, 1) == Complex(0.0, 0.7));
}

TEST_CASE("trace formula agrees with the factorized product") {
    Rng rng(205);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const SpinorParams k = rng.unit_spinor();
        worst = std::max(worst,
                         covering_map(k).max_abs_diff(covering_map_via_trace(k)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("covering is a homomorphism preserving the metric") {
    Rng rng(206);
    double worst_h = 0.0, worst_g = 0.0;
    for (int t = 0; t < 300; ++t) {
        const SpinorParams k1 = rng.unit_spinor(), k2 = rng.unit_spinor();
        const Matrix4R l1 = covering_map(k1), l2 = covering_map(k2);
        worst_g = std::max(worst_g, l1.lorentz_defect());
        worst_h = std::max(worst_h,
                           covering_map(compose_spinor(k1, k2)).max_abs_diff(l1 * l2));
    }
    CHECK(worst_h < 1e-9);
    CHECK(worst_g < 1e-10);
}

TEST_CASE("su2_rotation gives the block rotation and is sign-blind") {
    CHECK(su2_rotation(1.0, {}).max_abs_diff(Matrix4R::identity()) == 0.0);

    const double phi = 0.7;
    const Matrix4R l = su2_rotation(std::cos(phi / 2.0), {0, 0, std::sin(phi / 2.0)});
    CHECK(l(1, 1) == doctest::Approx(std::cos(phi)).epsilon(1e-14));
    CHECK(l(1, 2) == doctest::Approx(-std::sin(phi)).epsilon(1e-14));
    CHECK(l(2, 1) == doctest::Approx(std::sin(phi)).epsilon(1e-14));
    CHECK(l(0, 0) == 1.0);
    CHECK(l(3, 3) == doctest::Approx(1.0));

    Rng rng(207);
    for (int t = 0; t < 30; ++t) {
        const UnitQuaternion q = rng.unit_quaternion();
        const Vec3 n{q.n1, q.n2, q.n3};
        CHECK(su2_rotation(q.n0, n).max_abs_diff(su2_rotation(-q.n0, -n)) == 0.0);
        // agrees with the covering of k = (n0, -i n)
        const SpinorParams k{q.n0, Complex(0, -q.n1), Complex(0, -q.n2),
                             Complex(0, -q.n3)};
        CHECK(su2_rotation(q.n0, n).max_abs_diff(covering_map(k)) < 1e-12);
    }
    CHECK_THROWS_AS(su2_rotation(0.9, {0.9, 0, 0}), DomainError);
}

TEST_CASE("boost and rotation constructors validate the axis") {
    CHECK_THROWS_AS(boost(1.0, {0, 0, 0}), DomainError);
    CHECK_THROWS_AS(rotation(1.0, {0.5, 0, 0}), DomainError);
    const SpinorParams k0 = boost(0.0, {0, 0, 0});  // beta = 0 short-circuits
    CHECK(k0.k0 == Complex(1.0));
}

TEST_CASE("pi conjugation maps the mixed form to real boosts and rotations") {
    CHECK(pi_conjugate(Matrix4C::identity()).max_abs_diff(Matrix4C::identity()) == 0.0);

    const double beta = 0.6, phi = 0.8;
    // R built from A0 = ch(b/2), A3 = i sh(b/2) gives the real boost;
    // the beta factor carries (A0*, -A3*) = (ch(b/2), +i sh(b/2))
    QuadParam qa{std::cosh(beta / 2.0), {0.0, 0.0, Complex(0.0, std::sinh(beta / 2.0))}};
    QuadParam qb{std::cosh(beta / 2.0), {0.0, 0.0, Complex(0.0, std::sinh(beta / 2.0))}};
    const Matrix4C r = r_alpha(qa) * r_beta(qb);
    const Matrix4R l = real_part_checked(pi_conjugate(r), 1e-10);
    CHECK(l.max_abs_diff(covering_map(boost(beta, {0, 0, 1}))) < 1e-12);

    // real A0, A3 give the Euclidean rotation in the 1-2 plane
    QuadParam ra{std::cos(phi / 2.0), {0.0, 0.0, std::sin(phi / 2.0)}};
    QuadParam rb{std::cos(phi / 2.0), {0.0, 0.0, -std::sin(phi / 2.0)}};
    const Matrix4R lr = real_part_checked(pi_conjugate(r_alpha(ra) * r_beta(rb)), 1e-10);
    CHECK(lr(1, 1) == doctest::Approx(std::cos(phi)).epsilon(1e-13));
    CHECK(lr(1, 2) == doctest::Approx(-std::sin(phi)).epsilon(1e-13));
    CHECK(lr(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("u similarity quasi-diagonalizes the alpha family") {
    Rng rng(208);
    const Matrix4C u = u_similarity(), uinv = u.inverse();
    for (int t = 0; t < 20; ++t) {
        QuadParam q{rng.complex_unit_box(), {rng.complex_unit_box(),
                                             rng.complex_unit_box(),
                                             rng.complex_unit_box()}};
        const Matrix4C m = u * r_alpha(q) * uinv;
        SpinorMatrix blk = pauli(0) * q.a0;
        for (int j = 1; j <= 3; ++j) blk = blk + pauli(j) * (Complex(0, -1) * q.a[j - 1]);
        double worst = 0.0;
        for (int s = 0; s < 4; s += 2) {
            worst = std::max(worst, std::abs(m(s + 0, s + 0) - blk.a));
            worst = std::max(worst, std::abs(m(s + 0, s + 1) - blk.d));
            worst = std::max(worst, std::abs(m(s + 1, s + 0) - blk.c));
            worst = std::max(worst, std::abs(m(s + 1, s + 1) - blk.b));
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 4; ++j) {
                worst = std::max(worst, std::abs(m(i, j)));
                worst = std::max(worst, std::abs(m(j, i)));
            }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("v similarity quasi-diagonalizes the beta family") {
    // The beta-side spinors transform in the conjugate representation:
    // with the fixed V the blocks come out as the transpose of
    // (q0 I - i sigma.q) (the sigma-2 component flips sign).
    Rng rng(209);
    const Matrix4C v = v_similarity(), vinv = v.inverse();
    for (int t = 0; t < 20; ++t) {
        QuadParam q{rng.complex_unit_box(), {rng.complex_unit_box(),
                                             rng.complex_unit_box(),
                                             rng.complex_unit_box()}};
        const Matrix4C m = v * r_beta(q) * vinv;
        SpinorMatrix blk = pauli(0) * q.a0;
        for (int j = 1; j <= 3; ++j) blk = blk + pauli(j) * (Complex(0, -1) * q.a[j - 1]);
        // transpose within the (a d; c b) layout swaps c and d
        std::swap(blk.c, blk.d);
        double worst = 0.0;
        for (int s = 0; s < 4; s += 2) {
            worst = std::max(worst, std::abs(m(s + 0, s + 0) - blk.a));
            worst = std::max(worst, std::abs(m(s + 0, s + 1) - blk.d));
            worst = std::max(worst, std::abs(m(s + 1, s + 0) - blk.c));
            worst = std::max(worst, std::abs(m(s + 1, s + 1) - blk.b));
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 4; ++j) {
                worst = std::max(worst, std::abs(m(i, j)));
                worst = std::max(worst, std::abs(m(j, i)));
            }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("mueller_for_spinor_action matches the Pauli conjugation") {
    // S(B psi) = M S(psi) with M = g L g; checked through the trace map
    // 1/2 tr(sigma^a B sigma^b B^dagger) on random unimodular elements.
    Rng rng(210);
    for (int t = 0; t < 50; ++t) {
        const SpinorParams k = rng.unit_spinor();
        const SpinorMatrix b = spinor_matrix(k), bdag = b.adjoint();
        Matrix4C m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const SpinorMatrix p = pauli(i) * b * pauli(j) * bdag;
                m(i, j) = 0.5 * (p.a + p.b);
            }
        CHECK(real_part_checked(m, 1e-9).max_abs_diff(mueller_for_spinor_action(k)) <
              1e-12);
    }
}
