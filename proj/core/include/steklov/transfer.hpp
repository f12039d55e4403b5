#pragma once

#include <complex>

#include "steklov/geometry.hpp"

// The 2x2 transfer-matrix algebra.  All matrices live in the group
//
//     M1 = { (p, q; conj q, conj p) : |p|^2 - |q|^2 = 1 },
//
// which preserves the real subspace of conjugate pairs (c, conj c).  A wave of
// frequency sigma picks up the diagonal phase matrix B(l, sigma) along a side
// of length l and scatters through the Hermitian matrix A(alpha) at a vertex
// of angle alpha.

namespace steklov {

using cd = std::complex<double>;

// Vector (c, conj c); the second entry is implicit.
struct ConjVector {
    cd c{0.0, 0.0};
};

struct ConjMatrix {
    cd p{1.0, 0.0};
    cd q{0.0, 0.0};

    // det = |p|^2 - |q|^2, equals 1 for group elements.
    double det() const { return std::norm(p) - std::norm(q); }
    double trace() const { return 2.0 * p.real(); }  // trace is 2 Re p

    ConjVector apply(const ConjVector& v) const {
        return ConjVector{p * v.c + q * std::conj(v.c)};
    }

    static ConjMatrix identity() { return {}; }
};

inline ConjMatrix operator*(const ConjMatrix& a, const ConjMatrix& b) {
    return ConjMatrix{a.p * b.p + a.q * std::conj(b.q),
                      a.p * b.q + a.q * std::conj(b.p)};
}

// A(alpha) = (csc mu, -i cot mu; i cot mu, csc mu) with mu = pi^2/(2 alpha).
// Undefined at exceptional angles, where csc mu blows up.
ConjMatrix vertex_matrix(const AngleClass& a);

// B(l, sigma) = diag(e^{i l sigma}, e^{-i l sigma}).
ConjMatrix side_matrix(double length, double sigma);

// T(sigma) = C_n ... C_1 with C_j = A(alpha_j) B(l_j, sigma), evaluated
// right-to-left in one pass.
ConjMatrix polygon_transfer(const PolygonSpec& p, double sigma);

// U(sigma) = B(l_n) A(alpha_{n-1}) ... A(alpha_1) B(l_1) for a boundary arc
// with interior angles only; lengths.size() == interior_angles.size() + 1.
ConjMatrix component_transfer(const std::vector<AngleClass>& interior_angles,
                              const std::vector<double>& lengths, double sigma);

ConjMatrix zigzag_transfer(const ZigzagSpec& z, double sigma);

// Eigenvalues tan(mu/2), cot(mu/2) of A(alpha); the eigenvectors are the
// angle-independent conjugate pairs X_odd, X_even.
double vertex_eigenvalue_odd(const AngleClass& a);   // along X_odd
double vertex_eigenvalue_even(const AngleClass& a);  // along X_even

// X_even = (e^{-i pi/4}, e^{i pi/4})/sqrt(2), X_odd its conjugate; these are
// the admissible wave directions at an exceptional vertex of the given parity.
ConjVector x_even();
ConjVector x_odd();
ConjVector x_of_parity(int parity);       // +1 -> X_even, -1 -> X_odd
ConjVector x_perp_of_parity(int parity);  // the orthogonal one

// Boundary-condition vectors N = (1,1) and D = (i,-i).
ConjVector bc_vector(Bc b);
ConjVector bc_vector_perp(Bc b);

// Hermitian dot u . v = u1 conj(v1) + u2 conj(v2) restricted to conjugate
// pairs; the result is real.
double conj_dot(const ConjVector& u, const ConjVector& v);

}  // namespace steklov
