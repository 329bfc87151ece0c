#include "polarkit/types.hpp"

namespace polarkit {

Matrix4C Matrix4C::inverse() const {
    // Gauss-Jordan with partial pivoting on an augmented [M | I] block.
    std::array<std::array<Complex, 8>, 4> w{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) w[i][j] = (*this)(i, j);
        w[i][4 + i] = 1.0;
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        double best = std::abs(w[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            const double v = std::abs(w[r][col]);
            if (v > best) { best = v; pivot = r; }
        }
        if (best < 1e-14 * std::max(1.0, max_abs()))
            throw ConstraintError("Matrix4C::inverse: singular matrix");
        std::swap(w[col], w[pivot]);
        const Complex inv = 1.0 / w[col][col];
        for (int j = 0; j < 8; ++j) w[col][j] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const Complex f = w[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < 8; ++j) w[r][j] -= f * w[col][j];
        }
    }
    Matrix4C out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = w[i][4 + j];
    return out;
}

Matrix4R real_part_checked(const Matrix4C& m, double tol) {
    if (!m.finite())
        throw ConstraintError("matrix has non-finite entries");
    const double scale = std::max(1.0, m.max_abs());
    if (m.max_imag() > tol * scale)
        throw ConstraintError("expected a real matrix, imaginary residue too large",
                              m.max_imag());
    Matrix4R r;
    for (size_t i = 0; i < 16; ++i) r.e[i] = m.e[i].real();
    return r;
}

SpinorMatrix pauli(int i) {
    // Layout (a d; c b).
    constexpr Complex I{0.0, 1.0};
    switch (i) {
        case 0: return {1.0, 1.0, 0.0, 0.0};
        case 1: return {0.0, 0.0, 1.0, 1.0};
        case 2: return {0.0, 0.0, I, -I};
        case 3: return {1.0, -1.0, 0.0, 0.0};
        default: throw DomainError("pauli: index must be 0..3");
    }
}

} // namespace polarkit
