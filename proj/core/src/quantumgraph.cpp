#include "steklov/quantumgraph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/enumeration.hpp"
#include "steklov/trigpoly.hpp"

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;

double theta_of(const AngleClass& a) { return mu_alpha(a.value) / 2.0; }
}  // namespace

ScatteringPair scattering_matrices(const PolygonSpec& p, double sigma) {
    const std::size_t n = p.size();
    ScatteringPair sc{ComplexDense(2 * n), ComplexDense(2 * n)};
    for (std::size_t j = 0; j < n; ++j) {
        const double c = cos_mu(p.angles[j]);
        const double s = sin_mu(p.angles[j]);
        sc.vertex.at(2 * j, 2 * j) = -c;
        sc.vertex.at(2 * j, 2 * j + 1) = s;
        sc.vertex.at(2 * j + 1, 2 * j) = s;
        sc.vertex.at(2 * j + 1, 2 * j + 1) = c;
    }
    // Edge j couples the amplitude slots of its two endpoints with the phase
    // e^{-i sigma l_j}; edge 1 closes the cycle between slots 0 and 2n-1.
    const cd phase1 = std::polar(1.0, -sigma * p.lengths[0]);
    sc.edge.at(0, 2 * n - 1) = phase1;
    sc.edge.at(2 * n - 1, 0) = phase1;
    for (std::size_t k = 1; k < n; ++k) {
        const cd ph = std::polar(1.0, -sigma * p.lengths[k]);
        sc.edge.at(2 * k - 1, 2 * k) = ph;
        sc.edge.at(2 * k, 2 * k - 1) = ph;
    }
    return sc;
}

cd determinant(ComplexDense m) {
    const std::size_t n = m.n;
    cd det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(m.at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return cd{0.0, 0.0};
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c)
                std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cd factor = m.at(r, col) / m.at(col, col);
            for (std::size_t c = col; c < n; ++c)
                m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

cd secular_det(const PolygonSpec& p, double sigma) {
    const ScatteringPair sc = scattering_matrices(p, sigma);
    const std::size_t n = sc.vertex.n;
    ComplexDense m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cd acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += sc.vertex.at(i, k) * sc.edge.at(k, j);
            m.at(i, j) = acc - (i == j ? cd{1.0, 0.0} : cd{0.0, 0.0});
        }
    return determinant(std::move(m));
}

namespace {
// Transfer of (f, f'/sigma): a pure rotation along edges, diagonal
// (cot theta, tan theta) across non-exceptional vertices.
Mat2 edge_propagator(double length, double sigma) {
    const double x = sigma * length;
    const double c = std::cos(x), s = std::sin(x);
    return {c, s, -s, c};
}

Mat2 vertex_propagator(const AngleClass& a) {
    const double th = theta_of(a);
    return {1.0 / std::tan(th), 0.0, 0.0, std::tan(th)};
}

std::vector<QuasiEigenvalue> nonexceptional_graph_spectrum(
    const PolygonSpec& p, double sigma_max, const ScanOptions& opts) {
    const double length = perimeter(p);
    auto cycle = [&p](double sigma) {
        Mat2 m = Mat2::identity();
        for (std::size_t j = 0; j < p.size(); ++j)
            m = vertex_propagator(p.angles[j]) *
                (edge_propagator(p.lengths[j], sigma) * m);
        return m;
    };
    auto g = [&cycle](double sigma) { return cycle(sigma).trace() - 2.0; };

    std::vector<QuasiEigenvalue> spec;
    double prod_tan = 1.0;
    for (const auto& a : p.angles) prod_tan *= std::tan(theta_of(a));
    if (std::abs(prod_tan - 1.0) < 1e-9 * std::max(1.0, std::abs(prod_tan))) {
        QuasiEigenvalue q;
        q.sigma = 0.0;
        q.multiplicity = 1;
        spec.push_back(q);
    }

    const double zero_cut = 0.5 * opts.step_factor / length;
    for (const RootHit& hit :
         scan_real_roots(g, 0.0, sigma_max, length, opts)) {
        if (hit.sigma <= zero_cut) continue;
        const Mat2 m = cycle(hit.sigma);
        double dev = std::max({std::abs(m.a - 1.0), std::abs(m.b),
                               std::abs(m.c), std::abs(m.d - 1.0)});
        const double scale =
            std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c),
                      std::abs(m.d)});
        QuasiEigenvalue q;
        q.sigma = hit.sigma;
        q.multiplicity = (dev < 1e-6 * scale || hit.order_hint >= 2) ? 2 : 1;
        spec.push_back(q);
    }
    return spec;
}

std::vector<QuasiEigenvalue> exceptional_graph_spectrum(
    const PolygonSpec& p, double sigma_max, const ScanOptions& opts) {
    const ExceptionalDecomposition dec = decompose(p);
    std::vector<std::pair<double, int>> hits;
    for (std::size_t kappa = 0; kappa < dec.count(); ++kappa) {
        const ExceptionalComponent& y = dec.components[kappa];
        // Start state after the left exceptional vertex: f' = 0 for parity
        // +1, f = 0 for parity -1; the end condition selects the vanishing
        // entry at the right exceptional vertex.
        const bool start_neumann = y.left_exceptional.parity > 0;
        const int select = y.right_exceptional.parity > 0 ? 0 : 1;
        auto shoot = [&y, start_neumann, select](double sigma) {
            Mat2 m = edge_propagator(y.lengths[0], sigma);
            for (std::size_t j = 0; j < y.interior_angles.size(); ++j)
                m = edge_propagator(y.lengths[j + 1], sigma) *
                    (vertex_propagator(y.interior_angles[j]) * m);
            const auto v = start_neumann ? m.apply(1.0, 0.0) : m.apply(0.0, 1.0);
            return v[static_cast<std::size_t>(select)];
        };
        const double clen = y.total_length();
        const double zero_cut = 0.5 * opts.step_factor / clen;
        for (const RootHit& hit :
             scan_real_roots(shoot, 0.0, sigma_max, clen, opts)) {
            if (hit.sigma <= zero_cut) continue;
            hits.emplace_back(hit.sigma, static_cast<int>(kappa) + 1);
        }
    }
    std::sort(hits.begin(), hits.end());
    std::vector<QuasiEigenvalue> spec;
    int zero_mult = 0;
    for (const auto& y : dec.components)
        if (y.left_exceptional.parity > 0 && y.right_exceptional.parity < 0)
            ++zero_mult;
    if (zero_mult > 0) {
        QuasiEigenvalue q;
        q.sigma = 0.0;
        q.multiplicity = zero_mult;
        spec.push_back(q);
    }
    for (const auto& [sigma, kappa] : hits) {
        const double pair_tol =
            std::max(1e-9, 100.0 * opts.refine_tol * std::max(1.0, sigma));
        if (!spec.empty() && spec.back().sigma > 0.0 &&
            sigma - spec.back().sigma <= pair_tol) {
            spec.back().multiplicity += 1;
        } else {
            QuasiEigenvalue q;
            q.sigma = sigma;
            q.multiplicity = 1;
            q.provenance = {ProvenanceKind::Component, kappa};
            spec.push_back(q);
        }
    }
    return spec;
}
}  // namespace

std::vector<QuasiEigenvalue> graph_laplacian_spectrum(const PolygonSpec& p,
                                                      double sigma_max,
                                                      const ScanOptions& opts) {
    std::vector<QuasiEigenvalue> spec =
        p.exceptional() ? exceptional_graph_spectrum(p, sigma_max, opts)
                        : nonexceptional_graph_spectrum(p, sigma_max, opts);
    std::sort(spec.begin(), spec.end(),
              [](const QuasiEigenvalue& a, const QuasiEigenvalue& b) {
                  return a.sigma < b.sigma;
              });
    int next = 1;
    for (auto& q : spec) {
        q.index = next;
        next += q.multiplicity;
    }
    return spec;
}

DiracSymmetryReport dirac_symmetry_check(const PolygonSpec& p, double sigma_max,
                                         const ScanOptions& opts) {
    const RealTrigPoly fp = polygon_char_poly(p);
    DiracSymmetryReport rep;

    const double h = 0.01;
    for (double s = 0.0; s <= sigma_max; s += h)
        rep.evenness_residual =
            std::max(rep.evenness_residual, std::abs(fp.eval(s) - fp.eval(-s)));

    const double zero_cut = 0.5 * opts.step_factor / std::max(fp.max_freq(), 1e-9);
    std::vector<double> pos, neg;
    for (const RootHit& hit : scan_real_roots(fp, 0.0, sigma_max, opts))
        if (hit.sigma > zero_cut) pos.push_back(hit.sigma);
    for (const RootHit& hit : scan_real_roots(fp, -sigma_max, 0.0, opts))
        if (hit.sigma < -zero_cut) neg.push_back(-hit.sigma);
    std::sort(neg.begin(), neg.end());
    rep.mirrored = pos.size() == neg.size();
    if (rep.mirrored)
        for (std::size_t i = 0; i < pos.size(); ++i)
            rep.max_mirror_error =
                std::max(rep.max_mirror_error, std::abs(pos[i] - neg[i]));

    const double scale = fp.amp_scale();
    if (std::abs(fp.eval(0.0)) < opts.double_root_tol * scale) {
        rep.zero_even =
            std::abs(fp.derivative().eval(0.0)) < opts.double_root_tol * scale;
    } else {
        rep.zero_even = true;  // nothing to check
    }

    long zero_mult = 0;
    for (const auto& q : polygon_spectrum(p, {sigma_max, opts.step_factor,
                                              opts.refine_tol,
                                              opts.double_root_tol})) {
        if (q.sigma == 0.0)
            zero_mult = q.multiplicity;
        else
            rep.positive_count += q.multiplicity;
    }
    rep.dirac_count = 2 * rep.positive_count + 2 * zero_mult;
    return rep;
}

}  // namespace steklov
