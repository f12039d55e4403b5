#include "steklov/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;
}

long counting(const std::vector<double>& values, double sigma) {
    return static_cast<long>(
        std::upper_bound(values.begin(), values.end(), sigma) - values.begin());
}

double riesz_mean(const std::vector<double>& values, double lambda,
                  double sigma_max) {
    if (lambda > sigma_max)
        throw std::invalid_argument("spectrum truncated below lambda");
    double r = 0.0;
    for (double s : values) {
        if (s >= lambda) break;
        r += lambda - s;
    }
    return r;
}

HeatTrace heat_trace(const std::vector<double>& values, double t,
                     double sigma_max, double boundary_length, int sides) {
    if (!(t > 0.0)) throw std::invalid_argument("heat trace needs t > 0");
    HeatTrace h;
    for (double s : values) {
        if (s > sigma_max) break;
        h.value += std::exp(-t * s);
    }
    // N(s) - N(sigma_max) <= L (s - sigma_max) / pi + 2 (n + 2) for
    // s >= sigma_max, hence the integrated bound below.
    const double slack = 2.0 * (sides + 2);
    h.tail_bound = std::exp(-t * sigma_max) *
                   (boundary_length / (kPi * t) + slack);
    if (h.tail_bound > 0.01 * h.value)
        throw std::runtime_error("increase sigma_max");
    return h;
}

double weyl_residual(const std::vector<double>& values, double boundary_length,
                     double sigma_max) {
    const double slope = boundary_length / kPi;
    double worst = 0.0;
    long count = 0;
    for (double s : values) {
        if (s > sigma_max) break;
        // just before and just after the jump at s
        worst = std::max(worst, std::abs(static_cast<double>(count) - slope * s));
        ++count;
        worst = std::max(worst, std::abs(static_cast<double>(count) - slope * s));
    }
    worst = std::max(worst,
                     std::abs(static_cast<double>(count) - slope * sigma_max));
    return worst;
}

namespace {
// Continued-fraction rational approximation with bounded denominator.
std::optional<std::pair<long, long>> to_rational(double x, long max_den) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 64; ++i) {
        const double fl = std::floor(v);
        const long a = static_cast<long>(fl);
        const long p2 = a * p1 + p0;
        const long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <
            1e-12 * std::max(1.0, std::abs(x)))
            return std::make_pair(p1, q1);
        const double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}
}  // namespace

std::optional<SpectrumPeriod> detect_period(const std::vector<double>& lengths,
                                            const std::vector<double>& values,
                                            double sigma_max) {
    if (lengths.empty()) return std::nullopt;
    // l_j = (p_j / q_j) l_1 => all frequencies are multiples of l_1 / lcm(q).
    long common = 1;
    std::vector<long> nums;
    for (double l : lengths) {
        const auto r = to_rational(l / lengths.front(), 1000000);
        if (!r) return std::nullopt;
        common = std::lcm(common, r->second);
        if (common > 100000000L) return std::nullopt;
    }
    const double unit = lengths.front() / static_cast<double>(common);
    const double period = 2.0 * kPi / unit;
    if (period > sigma_max) return std::nullopt;
    const long k = static_cast<long>(std::floor(sigma_max / period));
    const long upto = counting(values, static_cast<double>(k) * period +
                                           0.5 * period / 1e6);
    if (upto % k != 0) return std::nullopt;
    return SpectrumPeriod{period, static_cast<int>(upto / k)};
}

}  // namespace steklov
