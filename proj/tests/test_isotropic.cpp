#include <doctest.h>

#include "test_util.hpp"

using namespace polarkit;
using pktest::Rng;

namespace {

Matrix4C from_complex_rows(const std::array<std::array<Complex, 4>, 4>& rows) {
    Matrix4C m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("basis change matrices are mutually inverse") {
    const Matrix4C prod = isotropic_basis() * isotropic_basis_inverse();
    CHECK(prod.max_abs_diff(Matrix4C::identity()) < 1e-15);
    CHECK(to_isotropic(Matrix4C::identity()).max_abs_diff(Matrix4C::identity()) < 1e-15);
}

TEST_CASE("six elementary transformations take their closed diagonal-block forms") {
    const double b = 0.7, phi = 0.9;
    const double ch = std::cosh(b), sh = std::sinh(b);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const Complex i{0.0, 1.0};
    double worst = 0.0;

    // boost along axis 1
    worst = std::max(worst,
        to_isotropic(covering_map(boost(b, {1, 0, 0}))).max_abs_diff(
            from_complex_rows({{{Complex(ch + 1), Complex(ch - 1), -sh, -sh},
                                {Complex(ch - 1), Complex(ch + 1), -sh, -sh},
                                {-sh, -sh, Complex(ch + 1), Complex(ch - 1)},
                                {-sh, -sh, Complex(ch - 1), Complex(ch + 1)}}}) * 0.5));

    // boost along axis 2
    worst = std::max(worst,
        to_isotropic(covering_map(boost(b, {0, 1, 0}))).max_abs_diff(
            from_complex_rows({{{Complex(ch + 1), Complex(ch - 1), -i * sh, i * sh},
                                {Complex(ch - 1), Complex(ch + 1), -i * sh, i * sh},
                                {i * sh, i * sh, Complex(ch + 1), Complex(-(ch - 1))},
                                {-i * sh, -i * sh, Complex(-(ch - 1)), Complex(ch + 1)}}}) * 0.5));

    // boost along axis 3
    worst = std::max(worst,
        to_isotropic(covering_map(boost(b, {0, 0, 1}))).max_abs_diff(
            Matrix4C::diagonal(std::exp(-b), std::exp(b), 1.0, 1.0)));

    // rotation about axis 1
    worst = std::max(worst,
        to_isotropic(covering_map(rotation(phi, {1, 0, 0}))).max_abs_diff(
            from_complex_rows({{{Complex(1 + cp), Complex(1 - cp), i * sp, -i * sp},
                                {Complex(1 - cp), Complex(1 + cp), -i * sp, i * sp},
                                {i * sp, -i * sp, Complex(1 + cp), Complex(1 - cp)},
                                {-i * sp, i * sp, Complex(1 - cp), Complex(1 + cp)}}}) * 0.5));

    // rotation about axis 2 (the lower-right block carries the signs of
    // the circular components)
    worst = std::max(worst,
        to_isotropic(covering_map(rotation(phi, {0, 1, 0}))).max_abs_diff(
            from_complex_rows({{{Complex(1 + cp), Complex(1 - cp), -sp, -sp},
                                {Complex(1 - cp), Complex(1 + cp), sp, sp},
                                {sp, -sp, Complex(1 + cp), Complex(-(1 - cp))},
                                {sp, -sp, Complex(-(1 - cp)), Complex(1 + cp)}}}) * 0.5));

    // rotation about axis 3
    worst = std::max(worst,
        to_isotropic(covering_map(rotation(phi, {0, 0, 1}))).max_abs_diff(
            Matrix4C::diagonal(1.0, 1.0, std::exp(-i * phi), std::exp(i * phi))));

    CHECK(worst < 1e-12);
}

TEST_CASE("conjugation is multiplicative") {
    Rng rng(701);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Matrix4C l1 = rng.lorentz().complex(), l2 = rng.lorentz().complex();
        worst = std::max(worst, to_isotropic(l1 * l2)
                                    .max_abs_diff(to_isotropic(l1) * to_isotropic(l2)));
        worst = std::max(worst,
                         from_isotropic(to_isotropic(l1)).max_abs_diff(l1));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("bilinear spinor form agrees with the conjugation route") {
    Rng rng(702);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const SpinorParams k = rng.unit_spinor();
        worst = std::max(worst,
                         isotropic_from_spinor(spinor_matrix(k))
                             .max_abs_diff(to_isotropic(covering_map(k))));
    }
    CHECK(worst < 1e-10);

    CHECK(isotropic_from_spinor(SpinorMatrix::identity())
              .max_abs_diff(Matrix4C::identity()) == 0.0);
    const double beta = 0.8;
    CHECK(isotropic_from_spinor(spinor_matrix(boost(beta, {0, 0, 1})))
              .max_abs_diff(Matrix4C::diagonal(std::exp(-beta), std::exp(beta), 1.0, 1.0)) <
          1e-13);
    CHECK_THROWS_AS(isotropic_from_spinor({2.0, 1.0, 0.0, 0.0}), ConstraintError);
}

TEST_CASE("spinor recovery roundtrips through the isotropic form") {
    Rng rng(703);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const SpinorMatrix m = spinor_matrix(rng.unit_spinor());
        const SpinorMatrix rec = recover_spinor(isotropic_from_spinor(m));
        worst = std::max(worst, std::min(rec.max_abs_diff(m), (-rec).max_abs_diff(m)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("recovery handles the diagonal branch") {
    const double beta = 1.3;
    const SpinorMatrix m = spinor_matrix(boost(beta, {0, 0, 1}));  // diag(e^b/2, e^-b/2)
    const Matrix4C u = isotropic_from_spinor(m);
    const SpinorMatrix rec = recover_spinor(u);
    CHECK(std::min(rec.max_abs_diff(m), (-rec).max_abs_diff(m)) < 1e-12);
    CHECK(std::abs(rec.c) == 0.0);
    CHECK(std::abs(rec.d) == 0.0);
    // a = e^{b/2}, b = e^{-b/2} with the positive-real sign convention
    CHECK(rec.a.real() == doctest::Approx(std::exp(beta / 2.0)).epsilon(1e-12));
}

TEST_CASE("recovery handles the anti-diagonal branch") {
    Rng rng(704);
    for (int t = 0; t < 20; ++t) {
        // a = b = 0 requires cd = -1
        const Complex c = std::exp(Complex(0.0, rng.uniform(-M_PI, M_PI))) *
                          rng.uniform(0.4, 2.0);
        const SpinorMatrix m{0.0, 0.0, c, -1.0 / c};
        const SpinorMatrix rec = recover_spinor(isotropic_from_spinor(m));
        CHECK(std::min(rec.max_abs_diff(m), (-rec).max_abs_diff(m)) < 1e-12);
        CHECK(std::abs(rec.a) == 0.0);
        CHECK(std::abs(rec.b) == 0.0);
    }
}

TEST_CASE("recovery rejects matrices outside the image") {
    Matrix4C bad = Matrix4C::identity();
    bad(0, 0) = 2.0;  // moduli no longer consistent
    CHECK_THROWS_AS(recover_spinor(bad), ConstraintError);
    Matrix4C neg = Matrix4C::identity();
    neg(0, 0) = -1.0;  // modulus squared cannot be negative
    CHECK_THROWS_AS(recover_spinor(neg), ConstraintError);
}

TEST_CASE("recovered sign convention is deterministic") {
    Rng rng(705);
    for (int t = 0; t < 50; ++t) {
        const SpinorMatrix m = spinor_matrix(rng.unit_spinor());
        const Matrix4C u = isotropic_from_spinor(m);
        const SpinorMatrix r1 = recover_spinor(u), r2 = recover_spinor(u);
        CHECK(r1.max_abs_diff(r2) == 0.0);
        CHECK(r1.a.real() >= -1e-12);
    }
}

TEST_CASE("stokes vectors map to the isotropic components and back") {
    const IsotropicStokes z1 = stokes_to_isotropic({1, 0, 0, 1});
    CHECK(std::abs(z1.z0 - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(z1.z1) < 1e-15);
    CHECK(std::abs(z1.z2) < 1e-15);

    const IsotropicStokes z2 = stokes_to_isotropic({1, 0, 0, 0});
    CHECK(std::abs(z2.z0 - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(z2.z1 - 1.0 / std::sqrt(2.0)) < 1e-15);

    Rng rng(706);
    for (int t = 0; t < 100; ++t) {
        const StokesVector s = rng.stokes(rng.uniform(0.0, 1.0));
        const IsotropicStokes z = stokes_to_isotropic(s);
        CHECK(std::abs(z.z2 - std::conj(z.z3)) < 1e-14);
        CHECK(std::abs(z.z0.imag()) < 1e-15);
        CHECK(stokes_from_isotropic(z).max_abs_diff(s) < 1e-13);
    }

    IsotropicStokes bad{1.0, Complex(0.0, 1.0), 0.0, 0.0};
    CHECK_THROWS_AS(stokes_from_isotropic(bad), DomainError);
}

TEST_CASE("the isotropic action and the Mueller action commute with the basis map") {
    Rng rng(707);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Matrix4R l = rng.lorentz();
        const StokesVector s = rng.stokes(0.7);
        const IsotropicStokes z = stokes_to_isotropic(s);
        const auto uz = to_isotropic(l) * z.array();
        const IsotropicStokes direct = stokes_to_isotropic(mueller_apply(l, s));
        for (int i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(uz[i] -
                                             direct.array()[i]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("recovered phase factors satisfy the modulus coupling") {
    Rng rng(708);
    int coupled = 0;
    for (int t = 0; t < 200; ++t) {
        const SpinorMatrix m = spinor_matrix(rng.unit_spinor());
        const SpinorMatrix rec = recover_spinor(isotropic_from_spinor(m));
        CHECK(std::abs(rec.det() - 1.0) < 1e-10);

        const IsotropicFactors f = IsotropicFactors::from_spinor(rec);
        CHECK(f.spinor().max_abs_diff(rec) < 1e-13);
        CHECK(std::abs(std::abs(f.alpha) - 1.0) < 1e-13);
        CHECK(std::abs(std::abs(f.t) - 1.0) < 1e-13);
        // unit determinant couples the moduli to the phases:
        // AB = alpha beta (s^2 t^2 - 1)/(s^2 t^2 - alpha^2 beta^2)
        const Complex st2 = f.s * f.s * f.t * f.t;
        const Complex ab2 = f.alpha * f.alpha * f.beta * f.beta;
        if (std::abs(st2 - ab2) < 1e-3) continue;  // coupling is singular there
        ++coupled;
        const Complex ab_expected = f.alpha * f.beta * (st2 - 1.0) / (st2 - ab2);
        const Complex cd_expected = f.s * f.t * (ab2 - 1.0) / (st2 - ab2);
        CHECK(std::abs(Complex(f.A * f.B) - ab_expected) < 1e-9);
        CHECK(std::abs(Complex(f.C * f.D) - cd_expected) < 1e-9);
    }
    CHECK(coupled > 100);
}
