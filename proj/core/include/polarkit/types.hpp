#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace polarkit {

using Complex = std::complex<double>;

/// Library-wide relative tolerance used by all closed-form checks.
inline constexpr double kDefaultTol = 1e-10;

/// Input outside an operation's domain (bad axis index, negative
/// intensity, non-unit vector, ...).  CLI maps this to exit code 3.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Degenerate configuration or violated solver constraint (singular
/// element, off-surface parameters, no rest frame, inconsistent
/// input matrix).  CLI maps this to exit code 4.
class ConstraintError : public std::runtime_error {
public:
    explicit ConstraintError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    /// Residual that triggered the error, when one is meaningful.
    double residual() const { return residual_; }

private:
    double residual_;
};

// ---------------------------------------------------------------------------
// Small fixed-size vectors
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct CVec3 {
    Complex x{}, y{}, z{};

    Complex& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    Complex operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator-() const { return {-x, -y, -z}; }
    CVec3 operator*(Complex s) const { return {x * s, y * s, z * s}; }

    /// Bilinear (unconjugated) dot product, as used by every closed form here.
    Complex dot(const CVec3& o) const { return x * o.x + y * o.y + z * o.z; }
    CVec3 cross(const CVec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
};

inline CVec3 operator*(Complex s, const CVec3& v) { return v * s; }

// ---------------------------------------------------------------------------
// 4x4 matrices
// ---------------------------------------------------------------------------

/// Dense complex 4x4 matrix, row-major.
struct Matrix4C {
    std::array<Complex, 16> e{};

    Complex& operator()(int r, int c) { return e[4 * r + c]; }
    const Complex& operator()(int r, int c) const { return e[4 * r + c]; }

    static Matrix4C zero() { return {}; }
    static Matrix4C identity() {
        Matrix4C m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix4C diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
        Matrix4C m;
        m(0, 0) = d0; m(1, 1) = d1; m(2, 2) = d2; m(3, 3) = d3;
        return m;
    }

    Matrix4C operator+(const Matrix4C& o) const {
        Matrix4C r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Matrix4C operator-(const Matrix4C& o) const {
        Matrix4C r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Matrix4C operator*(Complex s) const {
        Matrix4C r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] * s;
        return r;
    }
    Matrix4C operator*(const Matrix4C& o) const {
        Matrix4C r;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                const Complex a = (*this)(i, k);
                if (a == 0.0) continue;
                for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::array<Complex, 4> operator*(const std::array<Complex, 4>& v) const {
        std::array<Complex, 4> r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix4C transpose() const {
        Matrix4C r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    Matrix4C conj() const {
        Matrix4C r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = std::conj(e[i]);
        return r;
    }

    Complex trace() const { return e[0] + e[5] + e[10] + e[15]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e) m = std::max(m, std::abs(v));
        return m;
    }
    double max_abs_diff(const Matrix4C& o) const {
        double m = 0.0;
        for (size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(e[i] - o.e[i]));
        return m;
    }
    double max_imag() const {
        double m = 0.0;
        for (const auto& v : e) m = std::max(m, std::abs(v.imag()));
        return m;
    }

    bool finite() const {
        for (const auto& v : e)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    /// Gauss-Jordan inverse with partial pivoting.  Throws on a
    /// numerically singular matrix.
    Matrix4C inverse() const;
};

/// Dense real 4x4 matrix, row-major.  Lorentz (Mueller) matrices are
/// stored in this form once their imaginary residue has been checked.
struct Matrix4R {
    std::array<double, 16> e{};

    double& operator()(int r, int c) { return e[4 * r + c]; }
    const double& operator()(int r, int c) const { return e[4 * r + c]; }

    static Matrix4R identity() {
        Matrix4R m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
    /// Minkowski metric diag(1,-1,-1,-1).
    static Matrix4R metric() {
        Matrix4R m;
        m(0, 0) = 1.0; m(1, 1) = -1.0; m(2, 2) = -1.0; m(3, 3) = -1.0;
        return m;
    }

    Matrix4R operator*(const Matrix4R& o) const {
        Matrix4R r;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                const double a = (*this)(i, k);
                if (a == 0.0) continue;
                for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix4R operator-(const Matrix4R& o) const {
        Matrix4R r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }

    std::array<double, 4> operator*(const std::array<double, 4>& v) const {
        std::array<double, 4> r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix4R transpose() const {
        Matrix4R r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : e) m = std::max(m, std::abs(v));
        return m;
    }
    double max_abs_diff(const Matrix4R& o) const {
        double m = 0.0;
        for (size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(e[i] - o.e[i]));
        return m;
    }

    Matrix4C complex() const {
        Matrix4C r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = e[i];
        return r;
    }

    /// Max-entry deviation of L^T g L from g.
    double lorentz_defect() const {
        const Matrix4R g = metric();
        return (transpose() * g * *this).max_abs_diff(g);
    }
};

/// Truncates imaginary parts below `tol` (relative to the matrix scale);
/// a larger residue signals an internal inconsistency.
Matrix4R real_part_checked(const Matrix4C& m, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// 2x2 spinor matrices
// ---------------------------------------------------------------------------

/// 2x2 complex matrix stored in the layout
///     | a  d |
///     | c  b |
/// with det = a*b - c*d.
struct SpinorMatrix {
    Complex a{}, b{}, c{}, d{};

    static SpinorMatrix identity() { return {1.0, 1.0, 0.0, 0.0}; }

    Complex det() const { return a * b - c * d; }

    SpinorMatrix operator*(const SpinorMatrix& o) const {
        // rows (a d; c b) times rows (a' d'; c' b')
        return {a * o.a + d * o.c,   // a''
                c * o.d + b * o.b,   // b''
                c * o.a + b * o.c,   // c''
                a * o.d + d * o.b};  // d''
    }
    SpinorMatrix operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
    SpinorMatrix operator+(const SpinorMatrix& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    SpinorMatrix operator-() const { return {-a, -b, -c, -d}; }

    SpinorMatrix adjoint() const {
        return {std::conj(a), std::conj(b), std::conj(d), std::conj(c)};
    }

    std::array<Complex, 2> operator*(const std::array<Complex, 2>& v) const {
        return {a * v[0] + d * v[1], c * v[0] + b * v[1]};
    }

    double max_abs_diff(const SpinorMatrix& o) const {
        return std::max(std::max(std::abs(a - o.a), std::abs(b - o.b)),
                        std::max(std::abs(c - o.c), std::abs(d - o.d)));
    }
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }
};

/// Pauli matrices in the SpinorMatrix layout; index 0 is the identity.
SpinorMatrix pauli(int i);

} // namespace polarkit
