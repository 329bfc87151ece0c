#include "polarkit/jones.hpp"

namespace polarkit {

namespace {
constexpr Complex I{0.0, 1.0};

Complex polar1(double phase) { return {std::cos(phase), std::sin(phase)}; }
} // namespace

JonesSpinor JonesSpinor::from_amplitude_phase(double n, double m, double alpha,
                                              double beta) {
    if (n < 0.0 || m < 0.0)
        throw DomainError("JonesSpinor: amplitudes must be nonnegative");
    return {n * polar1(alpha), m * polar1(beta)};
}

JonesChart jones_from_stokes(const StokesVector& s, double gamma, double mute_phase,
                             double tol) {
    if (s.s0 <= 0.0) throw DomainError("jones_from_stokes: S0 must be positive");
    if (!s.isotropic(tol))
        throw DomainError("jones_from_stokes: Stokes vector is not isotropic");

    JonesChart out;
    const double rho = std::hypot(s.s1, s.s2);
    double delta;
    if (rho <= tol * s.s0) {
        delta = mute_phase;
        out.degenerate_axis = true;
    } else {
        delta = std::atan2(s.s2, s.s1);
        if (delta <= -M_PI) delta = M_PI;  // canonical branch (-pi, pi]
        // seam: Delta -> pi where the half-angle changes sign
        out.near_branch_seam = (M_PI - std::abs(delta)) * rho <= tol * s.s0;
    }
    const double n = std::sqrt(std::max(0.0, (s.s0 + s.s3) / 2.0));
    const double m = std::sqrt(std::max(0.0, (s.s0 - s.s3) / 2.0));
    const Complex g = polar1(gamma / 2.0);
    out.psi = {g * (n * polar1(-delta / 2.0)), g * (m * polar1(delta / 2.0))};
    return out;
}

StokesVector stokes_from_jones(const JonesSpinor& psi) {
    const Complex cross = std::conj(psi.psi1) * psi.psi2;
    return {std::norm(psi.psi1) + std::norm(psi.psi2), 2.0 * cross.real(),
            2.0 * cross.imag(), std::norm(psi.psi1) - std::norm(psi.psi2)};
}

AltSpinor alt_spinor_model(const StokesVector& s, double mute_phase, double tol) {
    if (s.s0 <= 0.0) throw DomainError("alt_spinor_model: S0 must be positive");
    if (!s.isotropic(tol))
        throw DomainError("alt_spinor_model: Stokes vector is not isotropic");

    AltSpinor out;
    const double rho = std::hypot(s.s1, s.s2);
    if (rho <= tol * s.s0) {
        out.degenerate_axis = true;
        out.delta = mute_phase;
    } else {
        out.delta = std::atan2(s.s2, s.s1);
    }
    out.s3_sign = (s.s3 >= 0.0) ? +1 : -1;
    out.n_prime = std::sqrt(std::max(0.0, s.s0 - rho));
    out.m_prime = std::sqrt(std::max(0.0, s.s0 + rho));

    // Both half-space charts reduce to the same complex pair
    // ((N - M) e^{-i D/2}, (N + M) e^{+i D/2}) written with the signed
    // difference; the chart moduli stay nonnegative.
    const double signed_diff = out.s3_sign > 0 ? out.n_prime : -out.n_prime;
    out.psi = {signed_diff * polar1(-out.delta / 2.0),
               out.m_prime * polar1(out.delta / 2.0)};
    return out;
}

JonesSpinor convert_models(const JonesSpinor& psi) {
    // psi' = (psi - i s2 psi*)/sqrt(2);  -i s2 = ((0,-1),(1,0)) as a real matrix
    const double f = 1.0 / std::sqrt(2.0);
    return {f * (psi.psi1 - std::conj(psi.psi2)), f * (psi.psi2 + std::conj(psi.psi1))};
}

JonesSpinor convert_models_inverse(const JonesSpinor& p) {
    // psi = (psi' + i s2 psi'*)/sqrt(2)
    const double f = 1.0 / std::sqrt(2.0);
    return {f * (p.psi1 + std::conj(p.psi2)), f * (p.psi2 - std::conj(p.psi1))};
}

StokesVector alt_model_stokes(const AltSpinor& alt) {
    const double n2 = alt.n_prime * alt.n_prime, m2 = alt.m_prime * alt.m_prime;
    const double rho = 0.5 * (m2 - n2);
    return {0.5 * (n2 + m2), rho * std::cos(alt.delta), rho * std::sin(alt.delta),
            alt.s3_sign * alt.n_prime * alt.m_prime};
}

JonesBiSpinor JonesBiSpinor::completely_polarized(Complex xi1, Complex xi2) {
    // eta = -i s2 xi*: eta1 = -xi2*, eta2 = +xi1*
    return {xi1, xi2, -std::conj(xi2), std::conj(xi1)};
}

JonesBiSpinor JonesBiSpinor::from_amplitude_phase(double N1, double N2, double n1,
                                                  double n2, double M1, double M2,
                                                  double m1, double m2) {
    if (N1 < 0.0 || N2 < 0.0 || M1 < 0.0 || M2 < 0.0)
        throw DomainError("JonesBiSpinor: amplitudes must be nonnegative");
    return {N1 * polar1(n1), N2 * polar1(n2), M1 * polar1(m1), M2 * polar1(m2)};
}

bool JonesBiSpinor::is_completely_polarized(double tol) const {
    const double scale = std::max({1.0, std::abs(xi1), std::abs(xi2)});
    return std::abs(eta1 + std::conj(xi2)) <= tol * scale &&
           std::abs(eta2 - std::conj(xi1)) <= tol * scale;
}

BiSpinorDecomposition bispinor_decompose(const JonesBiSpinor& b) {
    const Complex x1 = b.xi1, x2 = b.xi2, e1 = b.eta1, e2 = b.eta2;

    BiSpinorDecomposition d;
    // For the tensor square of one bi-spinor the antisymmetric
    // contractions cancel exactly.
    d.scalar = 0.0;
    d.pseudoscalar = 0.0;
    d.pseudovector = {Complex{}, Complex{}, Complex{}, Complex{}};

    d.vector[0] = x1 * e2 - x2 * e1;
    d.vector[1] = x1 * e1 - x2 * e2;
    d.vector[2] = I * (x1 * e1 + x2 * e2);
    d.vector[3] = -(x1 * e2 + x2 * e1);

    const Complex f01 = (I / 4.0) * ((x1 * x1 - x2 * x2) + (e1 * e1 - e2 * e2));
    const Complex f23 = 0.25 * ((x1 * x1 - x2 * x2) - (e1 * e1 - e2 * e2));
    const Complex f02 = -0.25 * ((x1 * x1 + x2 * x2) + (e1 * e1 + e2 * e2));
    const Complex f31 = -(1.0 / (4.0 * I)) * ((x1 * x1 + x2 * x2) - (e1 * e1 + e2 * e2));
    const Complex f03 = -(I / 2.0) * (x1 * x2 + e1 * e2);
    const Complex f12 = -0.5 * (x1 * x2 - e1 * e2);

    Matrix4C t;
    t(0, 1) = f01; t(1, 0) = -f01;
    t(0, 2) = f02; t(2, 0) = -f02;
    t(0, 3) = f03; t(3, 0) = -f03;
    t(2, 3) = f23; t(3, 2) = -f23;
    t(3, 1) = f31; t(1, 3) = -f31;
    t(1, 2) = f12; t(2, 1) = -f12;
    d.tensor = t;
    return d;
}

PolarizedTensor polarized_stokes_tensor(Complex xi1, Complex xi2) {
    const JonesBiSpinor b = JonesBiSpinor::completely_polarized(xi1, xi2);
    const BiSpinorDecomposition d = bispinor_decompose(b);

    PolarizedTensor out;
    // Under the reality condition the vector and tensor components are real.
    out.stokes = {d.vector[0].real(), d.vector[1].real(), d.vector[2].real(),
                  d.vector[3].real()};
    out.tensor.a = {d.tensor(0, 1).real(), d.tensor(0, 2).real(), d.tensor(0, 3).real()};
    out.tensor.b = {d.tensor(2, 3).real(), d.tensor(3, 1).real(), d.tensor(1, 2).real()};
    return out;
}

StokesVector partly_polarized_stokes(const JonesBiSpinor& b) {
    const double x1 = std::norm(b.xi1), x2 = std::norm(b.xi2);
    const double e1 = std::norm(b.eta1), e2 = std::norm(b.eta2);
    if (x1 + x2 + e1 + e2 <= 0.0)
        throw DomainError("partly_polarized_stokes: zero bi-spinor");

    const Complex ecross = b.eta1 * std::conj(b.eta2);
    const Complex xcross = b.xi1 * std::conj(b.xi2);
    return {0.5 * ((e2 + e1) + (x2 + x1)),
            ecross.real() - xcross.real(),
            xcross.imag() - ecross.imag(),
            -0.5 * ((e2 - e1) + (x1 - x2))};
}

std::pair<double, double> partly_polarized_bounds(const JonesBiSpinor& b) {
    const double p1 = std::abs(b.xi1) * std::abs(b.eta1);
    const double p2 = std::abs(b.xi2) * std::abs(b.eta2);
    const double lo = (p1 - p2) * (p1 - p2);
    const double hi = (p1 + p2) * (p1 + p2);
    return {lo, hi};
}

} // namespace polarkit
