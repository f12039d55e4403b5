#include "steklov/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> ReferenceSpectrum::expanded() const {
    std::vector<double> flat;
    for (const auto& [sigma, mult] : values)
        for (int i = 0; i < mult; ++i) flat.push_back(sigma);
    return flat;
}

void ReferenceSpectrum::push(double sigma, int mult) {
    values.emplace_back(sigma, mult);
}

void ReferenceSpectrum::finalize(double merge_tol) {
    std::sort(values.begin(), values.end());
    std::vector<std::pair<double, int>> merged;
    for (const auto& v : values) {
        if (!merged.empty() && v.first - merged.back().first <= merge_tol)
            merged.back().second += v.second;
        else
            merged.push_back(v);
    }
    values = std::move(merged);
}

ReferenceSpectrum all_special_spectrum(const PolygonSpec& p, double sigma_max) {
    if (!p.all_special())
        throw std::invalid_argument("spectrum formula needs all-special angles");
    long ksum = 0;
    for (const auto& a : p.angles) ksum += a.k;
    const double length = perimeter(p);

    ReferenceSpectrum ref;
    ref.source = "all-special";
    if (ksum % 2 == 0) {
        ref.push(0.0, 1);
        for (int m = 1; 2.0 * kPi * m / length <= sigma_max; ++m)
            ref.push(2.0 * kPi * m / length, 2);
    } else {
        for (int m = 1; 2.0 * kPi * (m - 0.5) / length <= sigma_max; ++m)
            ref.push(2.0 * kPi * (m - 0.5) / length, 2);
    }
    ref.finalize();
    return ref;
}

ReferenceSpectrum regular_polygon_spectrum(int n, const AngleClass& alpha,
                                           double ell, double sigma_max) {
    ReferenceSpectrum ref;
    ref.source = "quasi-regular";
    if (alpha.exceptional()) {
        for (int m = 1; (m - 0.5) * kPi / ell <= sigma_max; ++m)
            ref.push((m - 0.5) * kPi / ell, n);
        ref.finalize();
        return ref;
    }
    const double smu = sin_mu(alpha);
    for (int q = 0; q <= n / 2; ++q) {
        const double x = std::acos(smu * std::cos(2.0 * kPi * q / n));
        int mult = 2;
        if (!alpha.special() && (q == 0 || (n % 2 == 0 && 2 * q == n))) mult = 1;
        // At x = 0 or x = pi the two sign branches coincide.
        const bool boundary = x < 1e-12 || x > kPi - 1e-12;
        for (int sign : {+1, -1}) {
            if (boundary && sign < 0) continue;
            for (int m = 0;; ++m) {
                const double sigma = (sign * x + 2.0 * kPi * m) / ell;
                if (sigma > sigma_max) break;
                if (sigma < 0.0) continue;
                // sigma = 0 (special alpha, x = 0, m = 0) is always single.
                ref.push(sigma, sigma < 1e-14 ? 1 : mult);
            }
        }
    }
    ref.finalize();
    return ref;
}

ReferenceSpectrum sector_spectrum(double alpha, double sigma_max) {
    // alpha beyond pi is accepted; accuracy there is empirical only.
    if (!(alpha > 0.0) || !(alpha < 2.0 * kPi))
        throw std::invalid_argument("sector angle outside (0, 2*pi)");
    ReferenceSpectrum ref;
    ref.source = "sector";
    for (int m = 1; (kPi / alpha) * (m - 0.5) <= sigma_max; ++m)
        ref.push((kPi / alpha) * (m - 0.5), 1);
    const double mu = kPi * kPi / (2.0 * alpha);
    const double half = 0.5 * std::acos(std::cos(mu));
    for (int sign : {+1, -1}) {
        for (int m = 0;; ++m) {
            const double sigma = sign * half + kPi * m;
            if (sigma > sigma_max) break;
            if (sigma < 0.0 || (sigma == 0.0 && sign < 0)) continue;
            ref.push(sigma, 1);
        }
    }
    ref.finalize();
    return ref;
}

namespace {
template <typename F>
double bisect_root(F f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
        const double m = 0.5 * (a + b);
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
}  // namespace

ReferenceSpectrum square_exact_steklov(int count) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    ReferenceSpectrum ref;
    ref.source = "square-exact";
    ref.push(0.0, 1);
    ref.push(2.0, 1);
    const double eps = 1e-9;
    // Four interleaved branches, one root per tan period; each root carries a
    // two-dimensional eigenspace (the x/y-separated pair), which is what the
    // counting function requires to match the Weyl slope 4/pi.
    for (int k = 1; ref.values.size() < static_cast<std::size_t>(count) + 8; ++k) {
        // tan t = -tanh t on ((k - 1/2) pi, k pi)  ->  2 t tanh t
        double t = bisect_root(
            [](double x) { return std::tan(x) + std::tanh(x); },
            (k - 0.5) * kPi + eps, k * kPi - eps);
        ref.push(2.0 * t * std::tanh(t), 2);
        // tan t = coth t on ((k - 1) pi, (k - 1/2) pi)  ->  2 t tanh t
        t = bisect_root([](double x) { return std::tan(x) - 1.0 / std::tanh(x); },
                        (k - 1) * kPi + eps, (k - 0.5) * kPi - eps);
        ref.push(2.0 * t * std::tanh(t), 2);
        // tan t = tanh t on (k pi, (k + 1/2) pi)  ->  2 t coth t
        t = bisect_root([](double x) { return std::tan(x) - std::tanh(x); },
                        k * kPi + eps, (k + 0.5) * kPi - eps);
        ref.push(2.0 * t / std::tanh(t), 2);
        // tan t = -coth t on ((k - 1/2) pi, k pi)  ->  2 t coth t
        t = bisect_root([](double x) { return std::tan(x) + 1.0 / std::tanh(x); },
                        (k - 0.5) * kPi + eps, k * kPi - eps);
        ref.push(2.0 * t / std::tanh(t), 2);
    }
    ref.finalize(1e-12);
    if (ref.expanded().size() > static_cast<std::size_t>(count)) {
        std::vector<std::pair<double, int>> cut;
        int kept = 0;
        for (const auto& [sigma, mult] : ref.values) {
            if (kept >= count) break;
            const int take = std::min(mult, count - kept);
            cut.emplace_back(sigma, take);
            kept += take;
        }
        ref.values = std::move(cut);
    }
    return ref;
}

ReferenceSpectrum disk_exact(int count) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    ReferenceSpectrum ref;
    ref.source = "disk-exact";
    ref.push(0.0, 1);
    int have = 1;
    for (int m = 1; have < count; ++m) {
        ref.push(static_cast<double>(m), 2);
        have += 2;
    }
    return ref;
}

cd bruteforce_F(const std::vector<AngleClass>& angles,
                const std::vector<double>& lengths, double sigma) {
    const std::size_t n = angles.size();
    if (n == 0 || n > 16) throw std::invalid_argument("need 1 <= n <= 16");
    if (lengths.size() != n) throw std::invalid_argument("length count mismatch");
    cd total{0.0, 0.0};
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        SignVector zeta(n, 1);
        for (std::size_t b = 0; b + 1 < n; ++b)
            if (mask & (std::size_t{1} << b)) zeta[b + 1] = -1;
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += lengths[j] * zeta[j];
        total += frak_p(zeta, angles) * std::polar(1.0, dot * sigma);
    }
    return total;
}

std::pair<ExpPolynomial, ExpPolynomial> bruteforce_f_pair(
    const std::vector<AngleClass>& angles, const std::vector<double>& lengths) {
    const std::size_t n = angles.size();
    if (n == 0 || n > 16) throw std::invalid_argument("need 1 <= n <= 16");
    ExpPolynomial f, g;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        SignVector zeta(n, 1);
        for (std::size_t b = 0; b + 1 < n; ++b)
            if (mask & (std::size_t{1} << b)) zeta[b + 1] = -1;
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += lengths[j] * zeta[j];
        f.terms.push_back({cd{frak_p(zeta, angles), 0.0}, dot});
        g.terms.push_back({cd{0.0, -frak_q(zeta, angles)}, -dot});
    }
    f.canonicalize();
    g.canonicalize();
    return {f, g};
}

}  // namespace steklov
