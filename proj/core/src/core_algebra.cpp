#include "polarkit/core_algebra.hpp"

namespace polarkit {

namespace {

Matrix4C from_rows(std::array<std::array<double, 4>, 4> rows) {
    Matrix4C m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

// Levi-Civita with eps_123 = +1; indices 1..3.
double eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
        (i == 3 && j == 1 && k == 2))
        return 1.0;
    return -1.0;
}

} // namespace

Matrix4C alpha_basis(int i) {
    switch (i) {
        case 1:
            return from_rows({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}});
        case 2:
            return from_rows({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});
        case 3:
            return from_rows({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}});
        default:
            throw DomainError("alpha_basis: axis index must be 1, 2 or 3");
    }
}

Matrix4C beta_basis(int i) {
    switch (i) {
        case 1:
            return from_rows({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}});
        case 2:
            return from_rows({{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}});
        case 3:
            return from_rows({{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}});
        default:
            throw DomainError("beta_basis: axis index must be 1, 2 or 3");
    }
}

Matrix4C assemble(const GroupElementParams& p) {
    Matrix4C m = Matrix4C::identity() * p.E;
    for (int i = 1; i <= 3; ++i) {
        if (p.A[i - 1] != 0.0) m = m + alpha_basis(i) * p.A[i - 1];
        if (p.B[i - 1] != 0.0) m = m + beta_basis(i) * p.B[i - 1];
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const Complex c = p.C(i - 1, j - 1);
            if (c != 0.0) m = m + (alpha_basis(i) * beta_basis(j)) * c;
        }
    return m;
}

GroupElementParams project_params(const Matrix4C& m) {
    // The 16 basis matrices are mutually orthogonal under <X,Y> = tr(X^T Y),
    // each with <X,X> = 4.
    auto inner = [](const Matrix4C& x, const Matrix4C& y) {
        Complex s = 0.0;
        for (size_t k = 0; k < 16; ++k) s += x.e[k] * y.e[k];
        return s * 0.25;
    };
    GroupElementParams p;
    p.E = m.trace() * 0.25;
    for (int i = 1; i <= 3; ++i) {
        p.A[i - 1] = inner(alpha_basis(i), m);
        p.B[i - 1] = inner(beta_basis(i), m);
        for (int j = 1; j <= 3; ++j)
            p.C(i - 1, j - 1) = inner(alpha_basis(i) * beta_basis(j), m);
    }
    return p;
}

GroupElementParams compose_params(const GroupElementParams& p1,
                                  const GroupElementParams& p2) {
    // Expansion of the product of two basis decompositions using
    //   alpha^i alpha^j = -delta_ij + eps_ijk alpha^k,
    //   beta^i  beta^j  = -delta_ij - eps_ijk beta^k,
    // the two sets commuting.  p1 is the left factor.
    auto C1 = [&](int i, int j) { return p1.C(i - 1, j - 1); };
    auto C2 = [&](int i, int j) { return p2.C(i - 1, j - 1); };
    auto A1 = [&](int i) { return p1.A[i - 1]; };
    auto A2 = [&](int i) { return p2.A[i - 1]; };
    auto B1 = [&](int i) { return p1.B[i - 1]; };
    auto B2 = [&](int i) { return p2.B[i - 1]; };
    const Complex E1 = p1.E, E2 = p2.E;

    GroupElementParams r;

    r.E = E1 * E2 - p1.A.dot(p2.A) - p1.B.dot(p2.B);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) r.E += C1(i, j) * C2(i, j);

    for (int n = 1; n <= 3; ++n) {
        Complex an = E1 * A2(n) + A1(n) * E2;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) an += eps(i, j, n) * A1(i) * A2(j);
        for (int i = 1; i <= 3; ++i) {
            an -= B1(i) * C2(n, i);  // beta' against right alpha-beta block
            an -= C1(n, i) * B2(i);  // left alpha-beta block against beta
        }
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) an -= C1(i, j) * C2(k, j) * eps(i, k, n);
        r.A[n - 1] = an;

        Complex bn = E1 * B2(n) + B1(n) * E2;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) bn -= eps(i, j, n) * B1(i) * B2(j);
        for (int i = 1; i <= 3; ++i) {
            bn -= A1(i) * C2(i, n);
            bn -= A2(i) * C1(i, n);
        }
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int l = 1; l <= 3; ++l) bn += C1(i, j) * C2(i, l) * eps(j, l, n);
        r.B[n - 1] = bn;
    }

    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            Complex c = E1 * C2(n, m) + C1(n, m) * E2;
            c += A1(n) * B2(m) + A2(n) * B1(m);
            for (int i = 1; i <= 3; ++i)
                for (int k = 1; k <= 3; ++k) {
                    c += eps(i, k, n) * A1(i) * C2(k, m);  // alpha' x right block
                    c += eps(i, k, n) * C1(i, m) * A2(k);  // left block x alpha
                }
            for (int i = 1; i <= 3; ++i)
                for (int l = 1; l <= 3; ++l) {
                    c -= eps(i, l, m) * B1(i) * C2(n, l);  // beta' x right block
                    c -= eps(i, l, m) * C1(n, i) * B2(l);  // left block x beta
                }
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; l <= 3; ++l)
                            c -= C1(i, j) * C2(k, l) * eps(i, k, n) * eps(j, l, m);
            r.C(n - 1, m - 1) = c;
        }

    return r;
}

Matrix4C r_alpha(const QuadParam& q) {
    const Complex a0 = q.a0, a1 = q.a[0], a2 = q.a[1], a3 = q.a[2];
    Matrix4C m;
    m(0, 0) = a0;  m(0, 1) = a1;  m(0, 2) = a2;  m(0, 3) = a3;
    m(1, 0) = -a1; m(1, 1) = a0;  m(1, 2) = -a3; m(1, 3) = a2;
    m(2, 0) = -a2; m(2, 1) = a3;  m(2, 2) = a0;  m(2, 3) = -a1;
    m(3, 0) = -a3; m(3, 1) = -a2; m(3, 2) = a1;  m(3, 3) = a0;
    return m;
}

Matrix4C r_beta(const QuadParam& q) {
    const Complex b0 = q.a0, b1 = q.a[0], b2 = q.a[1], b3 = q.a[2];
    Matrix4C m;
    m(0, 0) = b0;  m(0, 1) = b1;  m(0, 2) = b2;  m(0, 3) = b3;
    m(1, 0) = -b1; m(1, 1) = b0;  m(1, 2) = b3;  m(1, 3) = -b2;
    m(2, 0) = -b2; m(2, 1) = -b3; m(2, 2) = b0;  m(2, 3) = b1;
    m(3, 0) = -b3; m(3, 1) = b2;  m(3, 2) = -b1; m(3, 3) = b0;
    return m;
}

QuadParam compose_quad(const QuadParam& q1, const QuadParam& q2, QuadFamily family) {
    const double sign = (family == QuadFamily::alpha) ? 1.0 : -1.0;
    QuadParam r;
    r.a0 = q1.a0 * q2.a0 - q1.a.dot(q2.a);
    r.a = q1.a0 * q2.a + q2.a0 * q1.a + sign * q1.a.cross(q2.a);
    return r;
}

QuadParam quad_inverse(const QuadParam& q, QuadFamily /*family*/, double tol) {
    const Complex n2 = q.norm2();
    const double scale = std::max(1.0, std::norm(q.a0) + std::norm(q.a[0]) +
                                           std::norm(q.a[1]) + std::norm(q.a[2]));
    if (std::abs(n2) <= tol * scale)
        throw ConstraintError("quad_inverse: singular element, a0^2 + a.a ~ 0",
                              std::abs(n2));
    const Complex inv = 1.0 / n2;
    return {q.a0 * inv, -q.a * inv};
}

} // namespace polarkit
