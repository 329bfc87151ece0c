#pragma once

#include "polarkit/polarkit.hpp"

#include <random>

namespace pktest {

using namespace polarkit;

/// Deterministic generator for reproducible property tests.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    double uniform(double lo = -1.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    Complex complex_unit_box() { return {uniform(), uniform()}; }

    Vec3 unit_vec3() {
        std::normal_distribution<double> nd;
        Vec3 v{nd(gen), nd(gen), nd(gen)};
        while (v.norm() < 1e-6) v = {nd(gen), nd(gen), nd(gen)};
        return v / v.norm();
    }

    UnitQuaternion unit_quaternion() {
        std::normal_distribution<double> nd;
        UnitQuaternion q{nd(gen), nd(gen), nd(gen), nd(gen)};
        while (q.norm2() < 1e-6) q = {nd(gen), nd(gen), nd(gen), nd(gen)};
        return q.normalized();
    }

    SpinorParams unit_spinor() {
        SpinorParams k{complex_unit_box(), complex_unit_box(), complex_unit_box(),
                       complex_unit_box()};
        while (std::abs(k.det()) < 1e-3)
            k = {complex_unit_box(), complex_unit_box(), complex_unit_box(),
                 complex_unit_box()};
        return k.normalized();
    }

    /// Time-like Stokes vector with the given degree of polarization.
    StokesVector stokes(double p, double intensity_lo = 0.5, double intensity_hi = 2.0) {
        const double i0 = uniform(intensity_lo, intensity_hi);
        const Vec3 n = unit_vec3();
        return {i0, i0 * p * n.x, i0 * p * n.y, i0 * p * n.z};
    }

    /// Random proper Lorentz matrix (boost composed with rotation).
    Matrix4R lorentz(double max_rapidity = 1.0) {
        const SpinorParams k = compose_spinor(boost(uniform(-max_rapidity, max_rapidity), unit_vec3()),
                                              rotation(uniform(-M_PI, M_PI), unit_vec3()));
        return covering_map(k);
    }
};

} // namespace pktest
