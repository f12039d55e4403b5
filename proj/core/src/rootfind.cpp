#include "steklov/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/enumeration.hpp"

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;

using Fn = std::function<double(double)>;

double refine_bisect(const Fn& f, double a, double b, double fa,
                     const ScanOptions& opts) {
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (b - a <= opts.refine_tol * std::max(1.0, std::abs(m))) return m;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Locates the extremum of f inside [a, b] by bisecting the sign of df.
double refine_extremum(const Fn& df, double a, double b,
                       const ScanOptions& opts) {
    double da = df(a);
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (b - a <= opts.refine_tol * std::max(1.0, std::abs(m))) return m;
        const double dm = df(m);
        if (dm == 0.0) return m;
        if ((da < 0.0) != (dm < 0.0)) {
            b = m;
        } else {
            a = m;
            da = dm;
        }
    }
    return 0.5 * (a + b);
}

std::vector<RootHit> scan_core(const Fn& f, const Fn& df, double lo, double hi,
                               double freq_bound, const ScanOptions& opts,
                               double amp_scale) {
    if (!(hi > lo)) throw std::invalid_argument("degenerate scan interval");
    const double span = hi - lo;
    double h = opts.step_factor / std::max(freq_bound, 1e-9);
    h = std::min(h, span / 8.0);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(span / h));
    h = span / static_cast<double>(steps);

    std::vector<double> x(steps + 1), y(steps + 1);
    double grid_max = 0.0;
    for (std::size_t i = 0; i <= steps; ++i) {
        x[i] = lo + static_cast<double>(i) * h;
        y[i] = f(x[i]);
        grid_max = std::max(grid_max, std::abs(y[i]));
    }
    const double scale = amp_scale > 0.0 ? amp_scale : grid_max;
    const double tangent_tol = opts.double_root_tol * scale;

    std::vector<RootHit> hits;
    for (std::size_t i = 0; i < steps; ++i) {
        if (y[i] == 0.0) {
            const double left = i > 0 ? y[i - 1] : y[i + 1];
            hits.push_back({x[i], (left < 0.0) != (y[i + 1] < 0.0) ? 1 : 2});
            continue;
        }
        if ((y[i] < 0.0) != (y[i + 1] < 0.0)) {
            hits.push_back({refine_bisect(f, x[i], x[i + 1], y[i], opts), 1});
        }
    }
    // Tangential roots: interior dips of |f| without a sign change.
    for (std::size_t i = 1; i < steps; ++i) {
        if (y[i] == 0.0) continue;
        const bool same_sign =
            (y[i - 1] < 0.0) == (y[i] < 0.0) && (y[i] < 0.0) == (y[i + 1] < 0.0);
        if (!same_sign) continue;
        if (std::abs(y[i]) > std::abs(y[i - 1]) ||
            std::abs(y[i]) > std::abs(y[i + 1]))
            continue;
        const double da = df(x[i - 1]);
        const double db = df(x[i + 1]);
        if ((da < 0.0) == (db < 0.0)) continue;
        const double m = refine_extremum(df, x[i - 1], x[i + 1], opts);
        if (std::abs(f(m)) < tangent_tol) hits.push_back({m, 2});
    }

    std::sort(hits.begin(), hits.end(),
              [](const RootHit& a, const RootHit& b) { return a.sigma < b.sigma; });
    std::vector<RootHit> merged;
    for (const auto& hit : hits) {
        const double merge_tol =
            8.0 * opts.refine_tol * std::max(1.0, std::abs(hit.sigma));
        if (!merged.empty() && hit.sigma - merged.back().sigma <= merge_tol)
            merged.back().order_hint =
                std::min(2, merged.back().order_hint + hit.order_hint);
        else
            merged.push_back(hit);
    }
    return merged;
}
}  // namespace

std::vector<RootHit> scan_real_roots(const RealTrigPoly& f, double lo,
                                     double hi, const ScanOptions& opts) {
    const RealTrigPoly d = f.derivative();
    return scan_core([&f](double s) { return f.eval(s); },
                     [&d](double s) { return d.eval(s); }, lo, hi, f.max_freq(),
                     opts, f.amp_scale());
}

std::vector<RootHit> scan_real_roots(const std::function<double(double)>& f,
                                     double lo, double hi, double freq_bound,
                                     const ScanOptions& opts, double amp_scale) {
    auto df = [&f](double s) {
        const double h = 1e-7 * std::max(1.0, std::abs(s));
        return (f(s + h) - f(s - h)) / (2.0 * h);
    };
    return scan_core(f, df, lo, hi, freq_bound, opts, amp_scale);
}

namespace {
void assign_indices(std::vector<QuasiEigenvalue>& spec) {
    std::sort(spec.begin(), spec.end(),
              [](const QuasiEigenvalue& a, const QuasiEigenvalue& b) {
                  return a.sigma < b.sigma;
              });
    int next = 1;
    for (auto& q : spec) {
        q.index = next;
        next += q.multiplicity;
    }
}

struct ComponentHit {
    double sigma;
    int component;  // 1-based
};

// Clusters per-component roots; multiplicity is the number of components
// vanishing at the same sigma.
std::vector<QuasiEigenvalue> cluster_hits(std::vector<ComponentHit>& hits,
                                          const ScanOptions& opts) {
    std::sort(hits.begin(), hits.end(),
              [](const ComponentHit& a, const ComponentHit& b) {
                  return a.sigma < b.sigma;
              });
    std::vector<QuasiEigenvalue> out;
    for (const auto& hit : hits) {
        const double pair_tol =
            std::max(1e-9, 100.0 * opts.refine_tol * std::max(1.0, hit.sigma));
        if (!out.empty() && hit.sigma - out.back().sigma <= pair_tol) {
            out.back().multiplicity += 1;
        } else {
            QuasiEigenvalue q;
            q.sigma = hit.sigma;
            q.multiplicity = 1;
            q.provenance = {ProvenanceKind::Component, hit.component};
            out.push_back(q);
        }
    }
    return out;
}
}  // namespace

std::vector<QuasiEigenvalue> polygon_spectrum(const PolygonSpec& p,
                                              const ScanOptions& opts) {
    std::vector<QuasiEigenvalue> spec;
    if (!p.exceptional()) {
        const RealTrigPoly fp = polygon_char_poly(p);
        auto [f, g] = f_pair(p.angles, p.lengths);
        (void)g;
        const RealTrigPoly fodd = imag_part(f);
        const double odd_scale = fodd.amp_scale();
        const double zero_cut =
            0.5 * opts.step_factor / std::max(fp.max_freq(), 1e-9);

        if (std::abs(fp.eval(0.0)) < opts.double_root_tol * fp.amp_scale()) {
            QuasiEigenvalue q;
            q.sigma = 0.0;
            q.multiplicity = 1;
            spec.push_back(q);
        }
        for (const RootHit& hit : scan_real_roots(fp, 0.0, opts.sigma_max, opts)) {
            if (hit.sigma <= zero_cut) continue;
            QuasiEigenvalue q;
            q.sigma = hit.sigma;
            const bool odd_vanishes =
                std::abs(fodd.eval(hit.sigma)) < opts.double_root_tol * odd_scale;
            q.multiplicity = (hit.order_hint >= 2 || odd_vanishes) ? 2 : 1;
            spec.push_back(q);
        }
    } else {
        const ExceptionalDecomposition dec = decompose(p);
        std::vector<ComponentHit> hits;
        for (std::size_t kappa = 0; kappa < dec.count(); ++kappa) {
            const RealTrigPoly poly = component_char_poly(dec.components[kappa]);
            const double zero_cut =
                0.5 * opts.step_factor / std::max(poly.max_freq(), 1e-9);
            for (const RootHit& hit :
                 scan_real_roots(poly, 0.0, opts.sigma_max, opts)) {
                if (hit.sigma <= zero_cut) continue;
                hits.push_back({hit.sigma, static_cast<int>(kappa) + 1});
            }
        }
        spec = cluster_hits(hits, opts);
        if (dec.zero_multiplicity() > 0) {
            QuasiEigenvalue q;
            q.sigma = 0.0;
            q.multiplicity = dec.zero_multiplicity();
            spec.push_back(q);
        }
    }
    assign_indices(spec);
    return spec;
}

std::vector<QuasiEigenvalue> zigzag_spectrum(const ZigzagSpec& z,
                                             const ScanOptions& opts) {
    const double length = total_length(z);
    const double back = kPi * (static_cast<double>(z.pieces()) + 4.0) / length;

    std::vector<QuasiEigenvalue> clusters;
    bool zero_candidate = false;
    if (!z.exceptional()) {
        const RealTrigPoly poly = zigzag_char_poly(z);
        const double zero_cut =
            0.5 * opts.step_factor / std::max(poly.max_freq(), 1e-9);
        zero_candidate =
            std::abs(poly.eval(0.0)) < opts.double_root_tol * poly.amp_scale();
        std::vector<ComponentHit> hits;
        for (const RootHit& hit :
             scan_real_roots(poly, -back, opts.sigma_max, opts))
            if (std::abs(hit.sigma) > zero_cut) hits.push_back({hit.sigma, 0});
        clusters = cluster_hits(hits, opts);
        for (auto& q : clusters) q.provenance = {ProvenanceKind::WholeBoundary, 0};
    } else {
        const ZigzagDecomposition dec = decompose(z);
        std::vector<ComponentHit> hits;
        int kappa = 1;
        auto scan_component = [&](const RealTrigPoly& poly) {
            const double zero_cut =
                0.5 * opts.step_factor / std::max(poly.max_freq(), 1e-9);
            if (std::abs(poly.eval(0.0)) < opts.double_root_tol * poly.amp_scale())
                zero_candidate = true;
            for (const RootHit& hit :
                 scan_real_roots(poly, -back, opts.sigma_max, opts))
                if (std::abs(hit.sigma) > zero_cut) hits.push_back({hit.sigma, kappa});
            ++kappa;
        };
        scan_component(start_component_char_poly(dec.start, z.bc_start));
        for (const auto& y : dec.interior) scan_component(component_char_poly(y));
        scan_component(end_component_char_poly(dec.end, z.bc_end));
        clusters = cluster_hits(hits, opts);
    }
    if (zero_candidate) {
        QuasiEigenvalue q;
        q.sigma = 0.0;
        q.multiplicity = 1;  // refined below from the counting jump
        clusters.push_back(q);
        std::sort(clusters.begin(), clusters.end(),
                  [](const QuasiEigenvalue& a, const QuasiEigenvalue& b) {
                      return a.sigma < b.sigma;
                  });
    }

    // Natural enumeration: the counting function jump across each cluster
    // fixes both the multiplicity and the indices; non-positive indices drop.
    std::vector<QuasiEigenvalue> out;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        double delta = 1e-6 * std::max(1.0, std::abs(clusters[i].sigma));
        if (i > 0)
            delta = std::min(delta, 0.25 * (clusters[i].sigma - clusters[i - 1].sigma));
        if (i + 1 < clusters.size())
            delta = std::min(delta, 0.25 * (clusters[i + 1].sigma - clusters[i].sigma));
        const long below = zigzag_counting(z, clusters[i].sigma - delta);
        const long above = zigzag_counting(z, clusters[i].sigma + delta);
        const long first = std::max(below + 1, 1L);
        if (above < first) continue;
        QuasiEigenvalue q = clusters[i];
        q.index = static_cast<int>(first);
        q.multiplicity = static_cast<int>(above - first + 1);
        out.push_back(q);
    }
    return out;
}

std::vector<double> expand(const std::vector<QuasiEigenvalue>& spec) {
    std::vector<double> flat;
    for (const auto& q : spec)
        for (int i = 0; i < q.multiplicity; ++i) flat.push_back(q.sigma);
    std::sort(flat.begin(), flat.end());
    return flat;
}

}  // namespace steklov
