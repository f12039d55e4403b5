#include "steklov/boundarywaves.hpp"

#include <cmath>
#include <numbers>

#include "steklov/trigpoly.hpp"

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;
const cd kI{0.0, 1.0};

// int_{-l}^{0} e^{i w s} ds
cd phase_integral(double w, double l) {
    if (std::abs(w) * l < 1e-9) {
        // series keeps full accuracy through w -> 0
        const cd iwl{0.0, -w * l};
        return l * (1.0 + iwl / 2.0 + iwl * iwl / 6.0);
    }
    return (1.0 - std::polar(1.0, -w * l)) / cd{0.0, w};
}

// int_{-l}^{0} psi_a psi_b ds for traces 2 Re(c e^{i sigma s}); the
// difference-frequency term is exactly the cross term whose cancellation
// between distinct eigenfunctions yields near-orthogonality.
double edge_pair_integral(const cd& ca, double sa, const cd& cb, double sb,
                          double l) {
    const cd diff = ca * std::conj(cb) * phase_integral(sa - sb, l);
    const cd sum = ca * cb * phase_integral(sa + sb, l);
    return 2.0 * (diff.real() + sum.real());
}

double norm_of(const BoundaryQuasiWave& w) {
    double total = 0.0;
    for (std::size_t j = 0; j < w.lengths.size(); ++j)
        total += edge_pair_integral(w.c_in[j].c, w.sigma, w.c_in[j].c, w.sigma,
                                    w.lengths[j]);
    return std::sqrt(total);
}

void rescale(BoundaryQuasiWave& w, double factor) {
    for (auto& c : w.c_in) c.c *= factor;
    for (auto& c : w.c_out) c.c *= factor;
}

BoundaryQuasiWave propagate_polygon(const PolygonSpec& p, double sigma,
                                    const ConjVector& seed) {
    const std::size_t n = p.size();
    BoundaryQuasiWave w;
    w.sigma = sigma;
    w.lengths = p.lengths;
    w.c_in.resize(n);
    w.c_out.resize(n);
    ConjVector prev = seed;
    for (std::size_t j = 0; j < n; ++j) {
        w.c_in[j] = side_matrix(p.lengths[j], sigma).apply(prev);
        w.c_out[j] = vertex_matrix(p.angles[j]).apply(w.c_in[j]);
        prev = w.c_out[j];
    }
    return w;
}

bool transfer_is_identity(const ConjMatrix& t) {
    const double eps = 1e-7 * (1.0 + std::abs(t.p));
    return std::abs(t.p - 1.0) < eps && std::abs(t.q) < eps;
}

BoundaryQuasiWave exceptional_component_wave(const PolygonSpec& p,
                                             const ExceptionalComponent& y,
                                             int kappa, double sigma) {
    BoundaryQuasiWave w;
    w.sigma = sigma;
    w.lengths = p.lengths;
    w.c_in.assign(p.size(), ConjVector{});
    w.c_out.assign(p.size(), ConjVector{});
    w.component = kappa;

    ConjVector cur = x_of_parity(y.left_exceptional.parity);
    // The outgoing coefficient lives at the vertex preceding the first edge.
    const std::size_t first = y.edge_indices.front();
    w.c_out[(first + p.size() - 1) % p.size()] = cur;
    for (std::size_t i = 0; i < y.lengths.size(); ++i) {
        const std::size_t edge = y.edge_indices[i];
        cur = side_matrix(y.lengths[i], sigma).apply(cur);
        w.c_in[edge] = cur;
        if (i + 1 < y.lengths.size()) {
            cur = vertex_matrix(y.interior_angles[i]).apply(cur);
            w.c_out[edge] = cur;
        }
    }
    return w;
}
}  // namespace

double BoundaryQuasiWave::psi(std::size_t edge, double s) const {
    return 2.0 * (c_in[edge].c * std::polar(1.0, sigma * s)).real();
}

std::vector<BoundaryQuasiWave> solve_wave_basis(const PolygonSpec& p,
                                                double sigma_m,
                                                const ScanOptions& opts) {
    std::vector<BoundaryQuasiWave> basis;
    basis.push_back(solve_wave(p, sigma_m, opts));
    if (!p.exceptional()) {
        try {
            basis.push_back(solve_wave(p, sigma_m, opts, &basis.back()));
        } catch (const std::exception&) {
        }
        return basis;
    }
    for (;;) {
        try {
            basis.push_back(solve_wave(p, sigma_m, opts, &basis.back()));
        } catch (const std::exception&) {
            break;
        }
    }
    return basis;
}

BoundaryQuasiWave solve_wave(const PolygonSpec& p, double sigma_m,
                             const ScanOptions& opts,
                             const BoundaryQuasiWave* orthogonal_to) {
    if (!p.exceptional()) {
        const ConjMatrix t = polygon_transfer(p, sigma_m);
        if (std::abs(t.trace() - 2.0) > 1e-6 * std::max(1.0, std::abs(t.trace())))
            throw std::invalid_argument("sigma is not a quasi-eigenvalue");
        const bool is_double = transfer_is_identity(t);
        ConjVector seed;
        if (orthogonal_to != nullptr) {
            if (!is_double)
                throw std::invalid_argument(
                    "second wave requested at a simple quasi-eigenvalue");
            // Any seed works at the identity; take the perpendicular one and
            // orthogonalise below.
            seed.c = kI * orthogonal_to->c_out.back().c;
        } else if (is_double) {
            seed.c = cd{1.0, 0.0};
        } else {
            // Unit eigenvector of T for eigenvalue 1 inside the conjugate
            // pairs: (p-1) c + q conj(c) = 0.
            const double theta = 0.5 * std::arg(-t.q / (t.p - 1.0));
            seed.c = std::polar(1.0, theta);
        }
        BoundaryQuasiWave w = propagate_polygon(p, sigma_m, seed);
        rescale(w, 1.0 / norm_of(w));
        if (orthogonal_to != nullptr) {
            const double r = wave_inner_product(w, *orthogonal_to);
            for (std::size_t j = 0; j < w.c_in.size(); ++j) {
                w.c_in[j].c -= r * orthogonal_to->c_in[j].c;
                w.c_out[j].c -= r * orthogonal_to->c_out[j].c;
            }
            const double nn = norm_of(w);
            if (nn < 1e-8)
                throw std::invalid_argument("wave space at sigma is exhausted");
            rescale(w, 1.0 / nn);
        }
        return w;
    }

    const ExceptionalDecomposition dec = decompose(p);
    const bool at_zero = std::abs(sigma_m) < 1e-12;
    std::vector<int> vanishing;
    for (std::size_t kappa = 0; kappa < dec.count(); ++kappa) {
        const ExceptionalComponent& y = dec.components[kappa];
        if (at_zero) {
            // Zero modes live on the components running from parity +1 to -1.
            if (y.left_exceptional.parity > 0 && y.right_exceptional.parity < 0)
                vanishing.push_back(static_cast<int>(kappa) + 1);
        } else {
            const RealTrigPoly poly = component_char_poly(y);
            if (std::abs(poly.eval(sigma_m)) <
                opts.double_root_tol * poly.amp_scale())
                vanishing.push_back(static_cast<int>(kappa) + 1);
        }
    }
    if (vanishing.empty())
        throw std::invalid_argument("sigma is not a quasi-eigenvalue");
    int pick = vanishing.front();
    if (orthogonal_to != nullptr) {
        pick = 0;
        for (int kappa : vanishing)
            if (kappa > orthogonal_to->component) {
                pick = kappa;
                break;
            }
        if (pick == 0)
            throw std::invalid_argument("wave space at sigma is exhausted");
    }
    BoundaryQuasiWave w =
        exceptional_component_wave(p, dec.components[pick - 1], pick, sigma_m);
    rescale(w, 1.0 / norm_of(w));
    return w;
}

namespace {
// Endpoint seed for a mixed-boundary wave: conjugate pair e^{-i chi} with
// chi = pi/4 -+ pi^2/(8 alpha) for a Neumann/Dirichlet endpoint of sector
// half-angle alpha.  A right-angle endpoint gives back the plain N/D vectors.
ConjVector endpoint_phase(Bc b, double alpha) {
    const double chi = b == Bc::N ? kPi / 4.0 - kPi * kPi / (8.0 * alpha)
                                  : kPi / 4.0 + kPi * kPi / (8.0 * alpha);
    return ConjVector{std::polar(1.0, -chi)};
}
}  // namespace

BoundaryQuasiWave solve_zigzag_wave(const ZigzagSpec& z, double sigma_m,
                                    double endpoint_alpha_start,
                                    double endpoint_alpha_end,
                                    const ScanOptions& opts) {
    (void)opts;
    (void)endpoint_alpha_end;
    const std::size_t n = z.pieces();
    BoundaryQuasiWave w;
    w.sigma = sigma_m;
    w.lengths = z.lengths;
    w.c_in.resize(n);
    w.c_out.resize(n);
    ConjVector cur = endpoint_phase(z.bc_start, endpoint_alpha_start);
    w.c_out[0] = cur;  // outgoing from the start point along piece 1
    for (std::size_t j = 0; j < n; ++j) {
        cur = side_matrix(z.lengths[j], sigma_m).apply(cur);
        w.c_in[j] = cur;
        if (j + 1 < n) {
            cur = vertex_matrix(z.angles[j]).apply(cur);
            w.c_out[j + 1] = cur;
        }
    }
    rescale(w, 1.0 / norm_of(w));
    return w;
}

BoundaryQuasiWave solve_zigzag_wave(const ZigzagSpec& z, double sigma_m,
                                    const ScanOptions& opts) {
    return solve_zigzag_wave(z, sigma_m, kPi / 2.0, kPi / 2.0, opts);
}

double wave_inner_product(const BoundaryQuasiWave& a,
                          const BoundaryQuasiWave& b) {
    if (a.lengths.size() != b.lengths.size())
        throw std::invalid_argument("waves live on different boundaries");
    double total = 0.0;
    for (std::size_t j = 0; j < a.lengths.size(); ++j)
        total += edge_pair_integral(a.c_in[j].c, a.sigma, b.c_in[j].c, b.sigma,
                                    a.lengths[j]);
    return total;
}

std::vector<double> edge_mass_distribution(const BoundaryQuasiWave& w) {
    std::vector<double> masses(w.lengths.size());
    for (std::size_t j = 0; j < w.lengths.size(); ++j)
        masses[j] = edge_pair_integral(w.c_in[j].c, w.sigma, w.c_in[j].c,
                                       w.sigma, w.lengths[j]);
    return masses;
}

double transfer_residual(const PolygonSpec& p, const BoundaryQuasiWave& w) {
    const std::size_t n = p.size();
    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        scale = std::max({scale, std::abs(w.c_in[j].c), std::abs(w.c_out[j].c)});
    scale = std::max(scale, 1e-30);

    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const ConjVector from_side =
            side_matrix(p.lengths[j], w.sigma).apply(w.c_out[(j + n - 1) % n]);
        worst = std::max(worst, std::abs(w.c_in[j].c - from_side.c));
        if (!p.angles[j].exceptional()) {
            const ConjVector through = vertex_matrix(p.angles[j]).apply(w.c_in[j]);
            const double gain = 1.0 / std::abs(sin_mu(p.angles[j]));
            worst = std::max(worst,
                             std::abs(w.c_out[j].c - through.c) / std::max(1.0, gain));
        } else {
            const ConjVector x = x_of_parity(p.angles[j].parity);
            worst = std::max(worst, std::abs(conj_dot(w.c_in[j], x)));
            worst = std::max(
                worst, std::abs(conj_dot(w.c_out[j], x_perp_of_parity(
                                                         p.angles[j].parity))));
        }
    }
    return worst / scale;
}

}  // namespace steklov
