#pragma once

#include <functional>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/trigpoly.hpp"

// Locates all quasi-eigenvalues in an interval with multiplicities by scanning
// the characteristic polynomials on an oversampled grid, bisecting sign
// changes, and chasing tangential (even-order) roots through the derivative.

namespace steklov {

struct ScanOptions {
    double sigma_max = 60.0;
    double step_factor = 0.05;      // grid step = step_factor / max frequency
    double refine_tol = 1e-12;      // scaled by max(1, |sigma|)
    double double_root_tol = 1e-7;  // relative to the amplitude scale
};

struct RootHit {
    double sigma;
    int order_hint;  // 1 for a sign change, 2 for a tangential root
};

// Roots of a real trigonometric polynomial on [lo, hi].  Tangential roots are
// refined through the exact derivative, so even-order roots are located to
// refine_tol as well.
std::vector<RootHit> scan_real_roots(const RealTrigPoly& f, double lo,
                                     double hi, const ScanOptions& opts);

// Same scan for a black-box function; freq_bound controls the grid step and
// tangential roots are refined through a central-difference derivative.
std::vector<RootHit> scan_real_roots(const std::function<double(double)>& f,
                                     double lo, double hi, double freq_bound,
                                     const ScanOptions& opts,
                                     double amp_scale = 0.0);

enum class ProvenanceKind { WholeBoundary, Component };

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::WholeBoundary;
    int component = 0;  // 1-based kappa when kind == Component
};

struct QuasiEigenvalue {
    double sigma = 0.0;
    int multiplicity = 1;
    Provenance provenance;
    int index = 0;  // enumeration position of the first copy
};

// Non-exceptional polygons: roots of F^P on (0, sigma_max], double exactly
// when F_odd vanishes there too, plus sigma = 0 (multiplicity one) when
// F^P(0) = 0.  Exceptional polygons: union of the component polynomial roots,
// with multiplicity the number of components vanishing, plus sigma = 0 with
// multiplicity (number of odd components)/2.
std::vector<QuasiEigenvalue> polygon_spectrum(const PolygonSpec& p,
                                              const ScanOptions& opts);

// Real roots of the zigzag polynomial (or of the per-component polynomials in
// the exceptional case), indexed by the natural enumeration: the counting
// function equals #{k <= m} at every continuity point.  Roots with
// non-positive indices are dropped.
std::vector<QuasiEigenvalue> zigzag_spectrum(const ZigzagSpec& z,
                                             const ScanOptions& opts);

// Expands multiplicities into a flat sorted list of sigma values.
std::vector<double> expand(const std::vector<QuasiEigenvalue>& spec);

}  // namespace steklov
