#pragma once

#include <string>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/trigpoly.hpp"

// Closed-form reference spectra used as ground truth by the test suites: the
// all-special and quasi-regular families, circular sectors, the exact Steklov
// eigenvalues of the unit square (transcendental) and the unit disk, plus the
// brute-force sign-vector evaluation of F_n that cross-checks the recurrence.

namespace steklov {

struct ReferenceSpectrum {
    std::vector<std::pair<double, int>> values;  // sorted (sigma, multiplicity)
    std::string source;

    std::vector<double> expanded() const;
    void push(double sigma, int mult);
    void finalize(double merge_tol = 1e-11);  // sort and merge coincidences
};

// All angles pi/(2k_j + 1): sigma = 0 once and doubles at 2 pi m / L when
// sum k_j is even, doubles at 2 pi (m - 1/2) / L when it is odd.
ReferenceSpectrum all_special_spectrum(const PolygonSpec& p, double sigma_max);

// Equal angles alpha and side lengths ell.  Non-exceptional alpha:
// sigma = (+-arccos(sin(mu) cos(2 pi q / n)) + 2 pi m) / ell with multiplicity
// two except the listed single cases; exceptional alpha: (m - 1/2) pi / ell
// with multiplicity n.
ReferenceSpectrum regular_polygon_spectrum(int n, const AngleClass& alpha,
                                           double ell, double sigma_max);

// Circular sector of opening alpha and radius one, i.e. the polygon
// ((alpha, pi/2, pi/2), (1, 1, alpha)): the series (pi/alpha)(m - 1/2) from
// the arc and +-arccos(cos mu)/2 + pi m from the radii.
ReferenceSpectrum sector_spectrum(double alpha, double sigma_max);

// Exact Steklov eigenvalues of the unit square: {0, 2} together with
// 2 t tanh t over tan t = -tanh t or tan t = coth t, and 2 t coth t over
// tan t = tanh t or tan t = -coth t, solved per branch by bisection.
ReferenceSpectrum square_exact_steklov(int count);

// Unit disk: 0, 1, 1, 2, 2, ...
ReferenceSpectrum disk_exact(int count);

// Direct 2^(n-1)-term evaluation of F_n (and its tilde companion), kept
// independent of the recurrence; n <= 16.
cd bruteforce_F(const std::vector<AngleClass>& angles,
                const std::vector<double>& lengths, double sigma);
std::pair<ExpPolynomial, ExpPolynomial> bruteforce_f_pair(
    const std::vector<AngleClass>& angles, const std::vector<double>& lengths);

}  // namespace steklov
