#pragma once

#include <complex>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/rootfind.hpp"

// The boundary of a polygon viewed as a cyclic metric graph.  Two independent
// computations live here: the secular determinant det(Sc_v Sc_e - Id) built
// from the vertex and edge scattering matrices, and a shooting solver for the
// graph Laplacian -f'' = sigma^2 f under the vertex matching conditions
//   f(V+0) = cot(pi^2/(4a)) f(V-0),  f'(V+0) = tan(pi^2/(4a)) f'(V-0),
// with decoupled per-component conditions at exceptional vertices.  Both
// reproduce the quasi-eigenvalues of the transfer/trig-polynomial routes.

namespace steklov {

// Dense square complex matrix, row-major.
struct ComplexDense {
    std::size_t n = 0;
    std::vector<cd> a;

    explicit ComplexDense(std::size_t dim = 0) : n(dim), a(dim * dim) {}
    cd& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const cd& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct ScatteringPair {
    ComplexDense vertex;  // 2n x 2n block diagonal, real orthogonal
    ComplexDense edge;    // 2n x 2n unitary permutation with phases
};

ScatteringPair scattering_matrices(const PolygonSpec& p, double sigma);

// Determinant by LU with partial pivoting.
cd determinant(ComplexDense m);

// det(Sc_v Sc_e(sigma) - Id); vanishes exactly at the quasi-eigenvalues and
// equals 2 e^{-i sigma L} F^P(sigma) identically.
cd secular_det(const PolygonSpec& p, double sigma);

// sigma = sqrt(nu) over the graph Laplacian eigenvalues nu <= sigma_max^2,
// with multiplicities; nu = 0 is decided analytically, never root-found.
std::vector<QuasiEigenvalue> graph_laplacian_spectrum(const PolygonSpec& p,
                                                      double sigma_max,
                                                      const ScanOptions& opts);

struct DiracSymmetryReport {
    double evenness_residual = 0.0;   // sup over grid of |F^P(s) - F^P(-s)|
    double max_mirror_error = 0.0;    // worst |s_+ - |s_-|| over paired roots
    bool mirrored = false;            // negative roots pair with positive ones
    bool zero_even = false;           // F^P odd derivative vanishes at 0
    long positive_count = 0;          // quasi-eigenvalue copies in (0, sigma_max]
    long dirac_count = 0;             // spectrum copies of the first-order system
                                      // in [-sigma_max, sigma_max]
};

// Verifies that the first-order (Dirac-type) spectrum is {+-sigma_m}, with
// the zero quasi-eigenvalue counted twice.
DiracSymmetryReport dirac_symmetry_check(const PolygonSpec& p, double sigma_max,
                                         const ScanOptions& opts);

}  // namespace steklov
