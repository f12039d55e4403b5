#pragma once

#include <complex>
#include <vector>

#include "steklov/geometry.hpp"

// Exponential sums sum_k a_k e^{i w_k sigma} and their real counterparts.
// The characteristic polynomials whose roots are the quasi-eigenvalues are
// assembled here: the polygon polynomial F^P, the per-component even/odd
// polynomials of an exceptional decomposition, and the four zigzag
// polynomials.  Everything is built by the O(n) two-term recurrence; the
// 2^(n-1)-term sign-vector sum is kept only as a test oracle.

namespace steklov {

using cd = std::complex<double>;

using SignVector = std::vector<int>;  // entries +-1

// Indices (1-based) where z_j != z_{j+1} with the cyclic rule z_{n+1} = z_1.
std::vector<int> sign_changes(const SignVector& z);

// Sign changes of (z_1, ..., z_n, -1) restricted to {1, ..., n}.
std::vector<int> padded_sign_changes(const SignVector& z);

// Products of cos(mu_j) over the (padded) sign-change set.
double frak_p(const SignVector& z, const std::vector<AngleClass>& angles);
double frak_q(const SignVector& z, const std::vector<AngleClass>& angles);

// cos/sin of mu_alpha, exact at special and exceptional angles.
double cos_mu(const AngleClass& a);
double sin_mu(const AngleClass& a);

struct ExpPolynomial {
    struct Term {
        cd amp;
        double freq;
    };
    std::vector<Term> terms;

    cd eval(double sigma) const;
    double max_freq() const;
    double amp_scale() const;  // sum |a_k|

    ExpPolynomial shifted(double dfreq) const;  // multiply by e^{i dfreq sigma}
    ExpPolynomial conjugated() const;           // conj amps, negated freqs

    // Merges terms whose frequencies coincide to within tol (default
    // 1e-12 * max frequency) and drops negligible amplitudes.
    void canonicalize(double freq_tol = -1.0);

    static ExpPolynomial one();
    static ExpPolynomial zero();
};

ExpPolynomial operator+(const ExpPolynomial& a, const ExpPolynomial& b);
ExpPolynomial operator*(const cd& s, const ExpPolynomial& a);

// Real trigonometric polynomial sum_k (c_k cos(w_k sigma) + s_k sin(w_k sigma)),
// with w_k >= 0.  Real evaluation avoids complex exponentials entirely.
struct RealTrigPoly {
    struct Term {
        double freq;
        double c;
        double s;
    };
    std::vector<Term> terms;

    double eval(double sigma) const;
    RealTrigPoly derivative() const;
    double max_freq() const;
    double amp_scale() const;  // sum hypot(c_k, s_k)

    void add_constant(double v);
    void canonicalize(double freq_tol = -1.0);
};

RealTrigPoly real_part(const ExpPolynomial& f);
RealTrigPoly imag_part(const ExpPolynomial& f);

// F_n and tilde F_n over (angles, lengths) via the two-term recurrence;
// exceptional angles are allowed (their cos(mu) = +-1 enters the coefficients).
std::pair<ExpPolynomial, ExpPolynomial> f_pair(
    const std::vector<AngleClass>& angles, const std::vector<double>& lengths);

// F^P(sigma) = Re F_n(sigma) - prod_j sin(mu_j); its nonnegative roots are the
// quasi-eigenvalues of the polygon, exceptional or not.
RealTrigPoly polygon_char_poly(const PolygonSpec& p);

// Even component (equal terminal parities) -> Re F, odd component -> Im F,
// taken over the component's interior angles plus its right exceptional angle.
RealTrigPoly component_char_poly(const ExceptionalComponent& y);
RealTrigPoly component_char_poly(const std::vector<AngleClass>& interior_angles,
                                 const std::vector<double>& lengths,
                                 int parity_left, int parity_right,
                                 const AngleClass& right_exceptional);

// The NN/ND/DN/DD polynomial matching (bc_start, bc_end); interior angles
// must be non-exceptional.
RealTrigPoly zigzag_char_poly(const ZigzagSpec& z);

// Endpoint components of an exceptional zigzag: free boundary condition on
// one side, an exceptional vertex on the other.
RealTrigPoly start_component_char_poly(const ZigzagEndpointComponent& y, Bc aleph);
RealTrigPoly end_component_char_poly(const ZigzagEndpointComponent& y, Bc beth);

double sin_mu_product(const PolygonSpec& p);

}  // namespace steklov
