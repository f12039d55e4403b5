#pragma once

#include <optional>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/rootfind.hpp"
#include "steklov/transfer.hpp"

// Boundary quasi-waves: piecewise trigonometric boundary traces of frequency
// sigma_m.  On side j (arc length s_j in [-l_j, 0]) the trace is
// psi_j(s_j) = 2 Re(c_{j,in} e^{i sigma s_j}); coefficients obey the side
// law c_{j,in} = B(l_j) c_{j-1,out} and the vertex law c_out = A(alpha) c_in
// (or the X(alpha) span conditions at exceptional vertices).  All integrals
// are closed-form exponential integrals, no quadrature.

namespace steklov {

struct BoundaryQuasiWave {
    double sigma = 0.0;
    std::vector<double> lengths;     // per edge
    std::vector<ConjVector> c_in;    // incoming into vertex j along edge j
    std::vector<ConjVector> c_out;   // outgoing from vertex j
    int component = 0;               // 1-based kappa when supported on one

    double psi(std::size_t edge, double s) const;  // s in [-l_edge, 0]
};

// Wave at a quasi-eigenvalue of the polygon, normalised to unit boundary L2
// norm.  For a double quasi-eigenvalue the second wave is requested by
// passing the first; it is chosen orthogonal to it.  Exceptional polygons
// yield one wave per vanishing component, in component order.
BoundaryQuasiWave solve_wave(const PolygonSpec& p, double sigma_m,
                             const ScanOptions& opts = {},
                             const BoundaryQuasiWave* orthogonal_to = nullptr);

// All independent waves at sigma_m (multiplicity many).
std::vector<BoundaryQuasiWave> solve_wave_basis(const PolygonSpec& p,
                                                double sigma_m,
                                                const ScanOptions& opts = {});

// Zigzag wave: seeded with the mixed-endpoint phase vector at the start
// point (endpoint sector of half-angle alpha, pi/2 for a plain zigzag) and
// propagated to the end point.
BoundaryQuasiWave solve_zigzag_wave(const ZigzagSpec& z, double sigma_m,
                                    double endpoint_alpha_start,
                                    double endpoint_alpha_end,
                                    const ScanOptions& opts = {});
BoundaryQuasiWave solve_zigzag_wave(const ZigzagSpec& z, double sigma_m,
                                    const ScanOptions& opts = {});

// Exact integral sum_j int psi_j^a psi_j^b ds over the boundary.
double wave_inner_product(const BoundaryQuasiWave& a, const BoundaryQuasiWave& b);

// Per-edge L2 masses; they sum to one for a normalised wave.
std::vector<double> edge_mass_distribution(const BoundaryQuasiWave& w);

// Largest violation of the side/vertex transfer laws, relative to the
// coefficient scale; construction keeps this at rounding level.
double transfer_residual(const PolygonSpec& p, const BoundaryQuasiWave& w);

}  // namespace steklov
