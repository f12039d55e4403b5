#pragma once

#include <optional>
#include <vector>

#include "steklov/rootfind.hpp"

// Spectral statistics of a computed quasi-spectrum: counting function, first
// Riesz mean R(z) = sum (z - s_m)_+, truncated heat trace with a certified
// tail bound, and the Weyl residual sup |N(sigma) - L sigma / pi|.

namespace steklov {

// #{ s_m <= sigma } over an expanded, sorted list.
long counting(const std::vector<double>& values, double sigma);

// Exact sum with multiplicities; throws when the spectrum is truncated below
// lambda (sigma_max < lambda).
double riesz_mean(const std::vector<double>& values, double lambda,
                  double sigma_max);

struct HeatTrace {
    double value = 0.0;       // sum over computed roots of e^{-t s}
    double tail_bound = 0.0;  // bound on the omitted tail
};

// Tail bound uses the counting bound N(s) <= L s / pi + (n + 2); throws
// "increase sigma_max" when the tail exceeds 1% of the value.
HeatTrace heat_trace(const std::vector<double>& values, double t,
                     double sigma_max, double boundary_length, int sides);

// Exact sup over [0, sigma_max] of |N(sigma) - L sigma / pi| (the counting
// function is piecewise constant, so the sup is attained at jump points).
double weyl_residual(const std::vector<double>& values, double boundary_length,
                     double sigma_max);

struct SpectrumPeriod {
    double period = 0.0;  // T with s_{m+M} = s_m + T
    int per_period = 0;   // M
};

// Period detection for commensurable side lengths by rational reconstruction
// of the length ratios (denominators up to 10^6).
std::optional<SpectrumPeriod> detect_period(const std::vector<double>& lengths,
                                            const std::vector<double>& values,
                                            double sigma_max);

}  // namespace steklov
