#pragma once

#include <array>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/transfer.hpp"

// Counting machinery on the universal cover of the punctured plane.  Conjugate
// pairs become plane vectors, side matrices become rotations (which add their
// angle to the unwrapped argument) and vertex matrices become symmetric maps
// (which move the argument by less than pi/2, negative ones adding pi).  The
// accumulated argument of a transfer word is strictly increasing in sigma and
// its integer crossings enumerate the quasi-eigenvalues.

namespace steklov {

// Real 2x2 matrix, used for the plane picture of the conjugate-pair algebra.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 rotation(double psi);
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    Mat2 transposed() const { return {a, c, b, d}; }
    std::array<double, 2> apply(double x, double y) const {
        return {a * x + b * y, c * x + d * y};
    }
};

Mat2 operator*(const Mat2& m, const Mat2& n);

// Plane image M# of a conjugate-pair matrix M.
Mat2 sharp(const ConjMatrix& m);
// Plane image (Re c, Im c) of a conjugate pair.
std::array<double, 2> sharp(const ConjVector& v);

// A nonzero plane vector with an unwrapped real argument.
struct LiftedVector {
    double modulus = 1.0;
    double arg = 0.0;
};

LiftedVector lift_rotate(const LiftedVector& v, double psi);

// Symmetric unit-determinant map with eigenvectors on the diagonal grid
// arg = pi/4 (mod pi/2).  tau is the eigenvalue along eigen_arg; a negative
// tau makes the map negative, and its action adds pi on top of |tau|'s.
struct LiftedSymmetric {
    double tau = 1.0;
    double eigen_arg = 0.0;  // element of the pi/4 (mod pi/2) grid

    bool negative() const { return tau < 0.0; }
};

// Lift of the vertex matrix A(alpha): eigenvalue tan(mu/2) along arg pi/4.
LiftedSymmetric lifted_vertex(const AngleClass& a);

LiftedVector lift_symmetric_apply(const LiftedSymmetric& s, const LiftedVector& v);

enum class WordVariant { T, U };

// Argument (and modulus) after pushing `start` through the transfer word at
// the given sigma, rightmost factor first.  T uses all n vertex matrices;
// U ends with the last rotation instead.
LiftedVector lifted_word_apply(const std::vector<AngleClass>& angles,
                               const std::vector<double>& lengths, double sigma,
                               const LiftedVector& start, WordVariant variant);

double lifted_word_arg(const std::vector<AngleClass>& angles,
                       const std::vector<double>& lengths, double sigma,
                       const LiftedVector& start, WordVariant variant);

LiftedVector lifted_bc(Bc b);  // N at arg 0, D at arg pi/2

// phi(sigma) = (arg(U(sigma) aleph) - arg(beth)) / pi, normalised so that the
// zigzag matrix at sigma = 0 acts as a positive map.  Counting functions are
// integer parts of phi.
double phi_zigzag(const ZigzagSpec& z, double sigma);

// Natural-enumeration counting function: [phi]+1 when the start condition is
// N, [phi] when it is D.
long zigzag_counting(const ZigzagSpec& z, double sigma);

// Exceptional zigzags count per component, with half-integer offsets keyed on
// the terminal parities; the total is an integer at every sigma.
double exceptional_component_counting(const ExceptionalComponent& y, double sigma);
double exceptional_start_counting(const ZigzagEndpointComponent& y, Bc aleph,
                                  double sigma);
double exceptional_end_counting(const ZigzagEndpointComponent& y, Bc beth,
                                double sigma);
long exceptional_zigzag_counting(const ZigzagSpec& z, double sigma);

// The two independent plane directions whose norm T#(sigma) preserves,
// principal-lifted into [0, pi).  A rotation preserves every norm; then the
// canonical pair {0, pi/2} is returned with the degenerate flag set.
struct NormPreservedDirections {
    LiftedVector t1;
    LiftedVector t2;
    bool degenerate = false;
};

NormPreservedDirections norm_preserved_directions(const PolygonSpec& p,
                                                  double sigma);

// d_j(sigma) = arg(T(sigma) t_j(sigma)) - arg(t_j(sigma)), j = 1,2, returned
// sorted; both are continuous and strictly increasing in sigma.
std::array<double, 2> polygon_winding(const PolygonSpec& p, double sigma);

// psi_j = d_j / (2 pi).
std::array<double, 2> polygon_psi(const PolygonSpec& p, double sigma);

// Number of quasi-eigenvalues in [0, sigma], counted by the 2-pi-crossings of
// the two winding functions plus the sigma = 0 contribution.
long polygon_counting(const PolygonSpec& p, double sigma);

}  // namespace steklov
