#include "steklov/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steklov {

namespace {
const cd kI{0.0, 1.0};

void check_signs(const SignVector& z) {
    for (int v : z)
        if (v != 1 && v != -1)
            throw std::invalid_argument("sign vector entries must be +-1");
}
}  // namespace

std::vector<int> sign_changes(const SignVector& z) {
    check_signs(z);
    std::vector<int> idx;
    const int n = static_cast<int>(z.size());
    for (int j = 0; j < n; ++j)
        if (z[j] != z[(j + 1) % n]) idx.push_back(j + 1);
    return idx;
}

std::vector<int> padded_sign_changes(const SignVector& z) {
    SignVector padded = z;
    padded.push_back(-1);
    std::vector<int> idx = sign_changes(padded);
    while (!idx.empty() && idx.back() > static_cast<int>(z.size())) idx.pop_back();
    return idx;
}

double cos_mu(const AngleClass& a) {
    switch (a.kind) {
        case AngleKind::Special:
            return 0.0;
        case AngleKind::Exceptional:
            return static_cast<double>(a.parity);
        case AngleKind::Generic:
            return std::cos(mu_alpha(a.value));
    }
    return 0.0;
}

double sin_mu(const AngleClass& a) {
    switch (a.kind) {
        case AngleKind::Special:
            return static_cast<double>(a.parity);
        case AngleKind::Exceptional:
            return 0.0;
        case AngleKind::Generic:
            return std::sin(mu_alpha(a.value));
    }
    return 0.0;
}

double frak_p(const SignVector& z, const std::vector<AngleClass>& angles) {
    if (z.size() != angles.size())
        throw std::invalid_argument("sign vector and angle count mismatch");
    double prod = 1.0;
    for (int j : sign_changes(z)) prod *= cos_mu(angles[j - 1]);
    return prod;
}

double frak_q(const SignVector& z, const std::vector<AngleClass>& angles) {
    if (z.size() != angles.size())
        throw std::invalid_argument("sign vector and angle count mismatch");
    double prod = 1.0;
    for (int j : padded_sign_changes(z)) prod *= cos_mu(angles[j - 1]);
    return prod;
}

cd ExpPolynomial::eval(double sigma) const {
    cd v{0.0, 0.0};
    for (const auto& t : terms) v += t.amp * std::polar(1.0, t.freq * sigma);
    return v;
}

double ExpPolynomial::max_freq() const {
    double m = 0.0;
    for (const auto& t : terms) m = std::max(m, std::abs(t.freq));
    return m;
}

double ExpPolynomial::amp_scale() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::abs(t.amp);
    return s;
}

ExpPolynomial ExpPolynomial::shifted(double dfreq) const {
    ExpPolynomial r = *this;
    for (auto& t : r.terms) t.freq += dfreq;
    return r;
}

ExpPolynomial ExpPolynomial::conjugated() const {
    ExpPolynomial r = *this;
    for (auto& t : r.terms) {
        t.amp = std::conj(t.amp);
        t.freq = -t.freq;
    }
    return r;
}

void ExpPolynomial::canonicalize(double freq_tol) {
    if (terms.empty()) return;
    if (freq_tol < 0.0) freq_tol = 1e-12 * std::max(1.0, max_freq());
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.freq < b.freq; });
    std::vector<Term> merged;
    for (const auto& t : terms) {
        if (!merged.empty() && t.freq - merged.back().freq <= freq_tol)
            merged.back().amp += t.amp;
        else
            merged.push_back(t);
    }
    const double scale = amp_scale();
    std::erase_if(merged, [&](const Term& t) {
        return std::abs(t.amp) <= 1e-15 * scale;
    });
    terms = std::move(merged);
}

ExpPolynomial ExpPolynomial::one() { return ExpPolynomial{{{cd{1.0, 0.0}, 0.0}}}; }
ExpPolynomial ExpPolynomial::zero() { return ExpPolynomial{}; }

ExpPolynomial operator+(const ExpPolynomial& a, const ExpPolynomial& b) {
    ExpPolynomial r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    r.canonicalize();
    return r;
}

ExpPolynomial operator*(const cd& s, const ExpPolynomial& a) {
    ExpPolynomial r = a;
    for (auto& t : r.terms) t.amp *= s;
    return r;
}

double RealTrigPoly::eval(double sigma) const {
    double v = 0.0;
    for (const auto& t : terms) {
        if (t.freq == 0.0) {
            v += t.c;
        } else {
            const double x = t.freq * sigma;
            v += t.c * std::cos(x) + t.s * std::sin(x);
        }
    }
    return v;
}

RealTrigPoly RealTrigPoly::derivative() const {
    RealTrigPoly d;
    for (const auto& t : terms) {
        if (t.freq == 0.0) continue;
        d.terms.push_back({t.freq, t.s * t.freq, -t.c * t.freq});
    }
    return d;
}

double RealTrigPoly::max_freq() const {
    double m = 0.0;
    for (const auto& t : terms) m = std::max(m, t.freq);
    return m;
}

double RealTrigPoly::amp_scale() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::hypot(t.c, t.s);
    return s;
}

void RealTrigPoly::add_constant(double v) {
    terms.push_back({0.0, v, 0.0});
    canonicalize();
}

void RealTrigPoly::canonicalize(double freq_tol) {
    if (terms.empty()) return;
    if (freq_tol < 0.0) freq_tol = 1e-12 * std::max(1.0, max_freq());
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.freq < b.freq; });
    std::vector<Term> merged;
    for (const auto& t : terms) {
        if (!merged.empty() && t.freq - merged.back().freq <= freq_tol) {
            merged.back().c += t.c;
            merged.back().s += t.s;
        } else {
            merged.push_back(t);
        }
    }
    const double scale = amp_scale();
    std::erase_if(merged, [&](const Term& t) {
        return t.freq != 0.0 && std::hypot(t.c, t.s) <= 1e-15 * scale;
    });
    terms = std::move(merged);
}

namespace {
// Folds a e^{i w sigma} into cos/sin terms on w >= 0.
RealTrigPoly fold(const ExpPolynomial& f, bool imaginary) {
    RealTrigPoly r;
    for (const auto& t : f.terms) {
        // Re: Re(a) cos - Im(a) sin;  Im: Im(a) cos + Re(a) sin  (at freq w).
        double c = imaginary ? t.amp.imag() : t.amp.real();
        double s = imaginary ? t.amp.real() : -t.amp.imag();
        double w = t.freq;
        if (w < 0.0) {
            w = -w;
            s = -s;
        }
        r.terms.push_back({w, c, s});
    }
    r.canonicalize();
    return r;
}
}  // namespace

RealTrigPoly real_part(const ExpPolynomial& f) { return fold(f, false); }
RealTrigPoly imag_part(const ExpPolynomial& f) { return fold(f, true); }

std::pair<ExpPolynomial, ExpPolynomial> f_pair(
    const std::vector<AngleClass>& angles, const std::vector<double>& lengths) {
    if (angles.size() != lengths.size())
        throw std::invalid_argument("f_pair needs matching angle/length counts");
    ExpPolynomial f = ExpPolynomial::one();
    ExpPolynomial g = ExpPolynomial::zero();
    for (std::size_t j = 0; j < angles.size(); ++j) {
        const cd coeff = -kI * cos_mu(angles[j]);
        ExpPolynomial fn =
            f.shifted(lengths[j]) + coeff * g.conjugated().shifted(-lengths[j]);
        ExpPolynomial gn =
            g.shifted(lengths[j]) + coeff * f.conjugated().shifted(-lengths[j]);
        f = std::move(fn);
        g = std::move(gn);
    }
    return {f, g};
}

namespace {
std::vector<double> drop_last(const std::vector<double>& v) {
    return std::vector<double>(v.begin(), v.end() - 1);
}

constexpr double kQuarterPi = std::numbers::pi / 4.0;
}  // namespace

RealTrigPoly start_component_char_poly(const ZigzagEndpointComponent& y,
                                       Bc aleph) {
    auto [f, g] = f_pair(y.interior_angles, drop_last(y.lengths));
    ExpPolynomial x1 =
        aleph == Bc::N ? f + g : kI * (f + (cd{-1.0, 0.0} * g));
    x1 = x1.shifted(y.lengths.back());
    // Orthogonality to X(alpha) reads Re(e^{+-i pi/4} x1) = 0.
    const cd phase = std::polar(1.0, y.exceptional.parity > 0 ? kQuarterPi
                                                              : -kQuarterPi);
    return real_part(phase * x1);
}

RealTrigPoly end_component_char_poly(const ZigzagEndpointComponent& y, Bc beth) {
    auto [f, g] = f_pair(y.interior_angles, drop_last(y.lengths));
    const cd v1 = std::polar(1.0, y.exceptional.parity > 0 ? -kQuarterPi
                                                           : kQuarterPi);
    ExpPolynomial x1 = v1 * f + std::conj(v1) * g;
    x1 = x1.shifted(y.lengths.back());
    return beth == Bc::N ? imag_part(x1) : real_part(x1);
}

double sin_mu_product(const PolygonSpec& p) {
    double prod = 1.0;
    for (const auto& a : p.angles) prod *= sin_mu(a);
    return prod;
}

RealTrigPoly polygon_char_poly(const PolygonSpec& p) {
    auto [f, g] = f_pair(p.angles, p.lengths);
    (void)g;
    RealTrigPoly fp = real_part(f);
    fp.add_constant(-sin_mu_product(p));
    return fp;
}

RealTrigPoly component_char_poly(const std::vector<AngleClass>& interior_angles,
                                 const std::vector<double>& lengths,
                                 int parity_left, int parity_right,
                                 const AngleClass& right_exceptional) {
    for (const auto& a : interior_angles)
        if (a.exceptional())
            throw std::invalid_argument("component interior angle is exceptional");
    std::vector<AngleClass> angles = interior_angles;
    angles.push_back(right_exceptional);
    auto [f, g] = f_pair(angles, lengths);
    (void)g;
    return parity_left == parity_right ? real_part(f) : imag_part(f);
}

RealTrigPoly component_char_poly(const ExceptionalComponent& y) {
    return component_char_poly(y.interior_angles, y.lengths,
                               y.left_exceptional.parity,
                               y.right_exceptional.parity, y.right_exceptional);
}

RealTrigPoly zigzag_char_poly(const ZigzagSpec& z) {
    if (z.exceptional())
        throw std::invalid_argument(
            "zigzag characteristic polynomial needs non-exceptional angles");
    std::vector<double> head(z.lengths.begin(), z.lengths.end() - 1);
    auto [f, g] = f_pair(z.angles, head);
    const double tail = z.lengths.back();
    // Condition U aleph || beth written through F_{n-1}, tilde F_{n-1}:
    //   NN: Im e^{i l_n s}(F+G) = 0      ND: Re e^{i l_n s}(F+G) = 0
    //   DN: Re e^{i l_n s}(F-G) = 0      DD: Im e^{i l_n s}(F-G) = 0
    ExpPolynomial sum =
        z.bc_start == Bc::N ? f + g : f + (cd{-1.0, 0.0} * g);
    sum = sum.shifted(tail);
    const bool want_imag = (z.bc_start == Bc::N) == (z.bc_end == Bc::N);
    RealTrigPoly poly = want_imag ? imag_part(sum) : real_part(sum);
    if (z.bc_start == Bc::D && z.bc_end == Bc::D)
        for (auto& t : poly.terms) {
            t.c = -t.c;
            t.s = -t.s;
        }
    return poly;
}

}  // namespace steklov
