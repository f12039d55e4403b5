#include "steklov/enumeration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steklov/trigpoly.hpp"

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kQuarterPi = kPi / 4.0;
}  // namespace

Mat2 Mat2::rotation(double psi) {
    const double c = std::cos(psi), s = std::sin(psi);
    return {c, -s, s, c};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 sharp(const ConjMatrix& m) {
    return {m.p.real() + m.q.real(), -m.p.imag() + m.q.imag(),
            m.p.imag() + m.q.imag(), m.p.real() - m.q.real()};
}

std::array<double, 2> sharp(const ConjVector& v) {
    return {v.c.real(), v.c.imag()};
}

LiftedVector lift_rotate(const LiftedVector& v, double psi) {
    return {v.modulus, v.arg + psi};
}

LiftedSymmetric lifted_vertex(const AngleClass& a) {
    if (a.exceptional())
        throw std::domain_error("no lifted vertex map at an exceptional angle");
    double tau;
    if (a.special()) {
        tau = static_cast<double>(a.parity);  // A(alpha) = parity * Id
    } else {
        tau = std::tan(mu_alpha(a.value) / 2.0);
    }
    return LiftedSymmetric{tau, kQuarterPi};
}

LiftedVector lift_symmetric_apply(const LiftedSymmetric& s,
                                  const LiftedVector& v) {
    if (s.tau == 0.0) throw std::invalid_argument("symmetric map needs tau != 0");
    if (s.negative()) {
        LiftedVector w = lift_symmetric_apply({-s.tau, s.eigen_arg}, v);
        w.arg += kPi;
        return w;
    }
    // Quadrant boundary below v; the eigenvalue alternates between tau and
    // 1/tau on consecutive boundaries.
    const double k = std::floor((v.arg - s.eigen_arg) / kHalfPi);
    const double w1 = s.eigen_arg + k * kHalfPi;
    const double tau_eff =
        (static_cast<long long>(std::llround(k)) % 2 == 0) ? s.tau : 1.0 / s.tau;
    const double delta = v.arg - w1;
    const double x = tau_eff * std::cos(delta);
    const double y = std::sin(delta) / tau_eff;
    return {v.modulus * std::hypot(x, y), w1 + std::atan2(y, x)};
}

namespace {
LiftedVector word_apply(const std::vector<AngleClass>& angles,
                        const std::vector<double>& lengths, double sigma,
                        LiftedVector v, bool include_last_vertex) {
    const std::size_t n = lengths.size();
    for (std::size_t j = 0; j < n; ++j) {
        v = lift_rotate(v, sigma * lengths[j]);
        if (j + 1 < n || include_last_vertex)
            v = lift_symmetric_apply(lifted_vertex(angles[j]), v);
    }
    return v;
}
}  // namespace

LiftedVector lifted_word_apply(const std::vector<AngleClass>& angles,
                               const std::vector<double>& lengths, double sigma,
                               const LiftedVector& start, WordVariant variant) {
    if (variant == WordVariant::T) {
        if (angles.size() != lengths.size())
            throw std::invalid_argument("T word needs one angle per side");
        return word_apply(angles, lengths, sigma, start, true);
    }
    if (angles.size() + 1 != lengths.size())
        throw std::invalid_argument("U word needs one fewer angle than sides");
    return word_apply(angles, lengths, sigma, start, false);
}

double lifted_word_arg(const std::vector<AngleClass>& angles,
                       const std::vector<double>& lengths, double sigma,
                       const LiftedVector& start, WordVariant variant) {
    return lifted_word_apply(angles, lengths, sigma, start, variant).arg;
}

LiftedVector lifted_bc(Bc b) {
    return b == Bc::N ? LiftedVector{1.0, 0.0} : LiftedVector{1.0, kHalfPi};
}

namespace {
// Lift of the plane direction of w (or -w) into (base - pi/4, base + pi/4).
// Used to pin the sigma = 0 value of an argument function: the zigzag matrix
// at sigma = 0 is a product of symmetric maps whose positive version keeps
// each quadrant invariant.
double principal_window_arg(const std::array<double, 2>& w, double base) {
    const double theta = std::atan2(w[1], w[0]);
    const double k = std::round((base - theta) / kPi);
    const double lifted = theta + k * kPi;
    if (std::abs(lifted - base) > kQuarterPi + 1e-9)
        throw std::runtime_error("direction escaped its principal window");
    return lifted;
}

Mat2 interior_sharp_product(const std::vector<AngleClass>& angles) {
    Mat2 m = Mat2::identity();
    for (const auto& a : angles) m = sharp(vertex_matrix(a)) * m;
    return m;
}

// arg(U(sigma) start) anchored so that the sigma = 0 value lies in the
// principal window around base_arg (the positive-map normalisation).
double anchored_word_arg(const std::vector<AngleClass>& angles,
                         const std::vector<double>& lengths, double sigma,
                         const LiftedVector& start, double anchor_arg) {
    const double raw = lifted_word_arg(angles, lengths, sigma, start, WordVariant::U);
    const double raw0 = lifted_word_arg(angles, lengths, 0.0, start, WordVariant::U);
    return raw - raw0 + anchor_arg;
}
}  // namespace

double phi_zigzag(const ZigzagSpec& z, double sigma) {
    if (z.exceptional())
        throw std::domain_error("phi is undefined for exceptional zigzags");
    const LiftedVector aleph = lifted_bc(z.bc_start);
    const LiftedVector beth = lifted_bc(z.bc_end);
    const Mat2 u0 = interior_sharp_product(z.angles);
    const auto w = u0.apply(std::cos(aleph.arg), std::sin(aleph.arg));
    const double anchor = principal_window_arg(w, aleph.arg);
    return (anchored_word_arg(z.angles, z.lengths, sigma, aleph, anchor) -
            beth.arg) /
           kPi;
}

long zigzag_counting(const ZigzagSpec& z, double sigma) {
    if (z.exceptional()) return exceptional_zigzag_counting(z, sigma);
    const double phi = phi_zigzag(z, sigma);
    return static_cast<long>(std::floor(phi)) + (z.bc_start == Bc::N ? 1 : 0);
}

namespace {
LiftedVector lifted_x(int parity) {
    return {1.0, parity > 0 ? -kQuarterPi : kQuarterPi};  // X_even / X_odd
}

LiftedVector lifted_x_perp(int parity) { return lifted_x(-parity); }
}  // namespace

double exceptional_component_counting(const ExceptionalComponent& y,
                                      double sigma) {
    const LiftedVector start = lifted_x(y.left_exceptional.parity);
    const LiftedVector target = lifted_x_perp(y.right_exceptional.parity);
    // U(0) fixes the grid direction start exactly, so it is its own anchor.
    const double phi =
        (anchored_word_arg(y.interior_angles, y.lengths, sigma, start, start.arg) -
         target.arg) /
        kPi;
    double offset;
    if (y.left_exceptional.parity != y.right_exceptional.parity)
        offset = 0.5;
    else
        offset = y.left_exceptional.parity > 0 ? 1.0 : 0.0;
    return std::floor(phi) + offset;
}

double exceptional_start_counting(const ZigzagEndpointComponent& y, Bc aleph,
                                  double sigma) {
    const LiftedVector start = lifted_bc(aleph);
    const LiftedVector target = lifted_x_perp(y.exceptional.parity);
    const Mat2 u0 = interior_sharp_product(y.interior_angles);
    const auto w = u0.apply(std::cos(start.arg), std::sin(start.arg));
    const double anchor = principal_window_arg(w, start.arg);
    const double phi =
        (anchored_word_arg(y.interior_angles, y.lengths, sigma, start, anchor) -
         target.arg) /
        kPi;
    const bool odd = y.exceptional.parity < 0;
    double offset;
    if (aleph == Bc::D)
        offset = odd ? -0.5 : 0.0;
    else
        offset = odd ? 0.5 : 1.0;
    return std::floor(phi) + offset;
}

double exceptional_end_counting(const ZigzagEndpointComponent& y, Bc beth,
                                double sigma) {
    const LiftedVector start = lifted_x(y.exceptional.parity);
    const LiftedVector target = lifted_bc(beth);
    const double phi =
        (anchored_word_arg(y.interior_angles, y.lengths, sigma, start, start.arg) -
         target.arg) /
        kPi;
    return std::floor(phi) + (y.exceptional.parity < 0 ? 0.5 : 1.0);
}

long exceptional_zigzag_counting(const ZigzagSpec& z, double sigma) {
    const ZigzagDecomposition d = decompose(z);
    double total = exceptional_start_counting(d.start, z.bc_start, sigma);
    for (const auto& y : d.interior)
        total += exceptional_component_counting(y, sigma);
    total += exceptional_end_counting(d.end, z.bc_end, sigma);
    const double rounded = std::round(total);
    if (std::abs(total - rounded) > 1e-6)
        throw std::runtime_error("component counting functions failed to sum to an integer");
    return static_cast<long>(rounded);
}

NormPreservedDirections norm_preserved_directions(const PolygonSpec& p,
                                                  double sigma) {
    if (p.exceptional())
        throw std::domain_error("norm-preserved directions need a non-exceptional polygon");
    const Mat2 t = sharp(polygon_transfer(p, sigma));
    const Mat2 g = t.transposed() * t;
    const double half_tr = 0.5 * (g.a + g.d);
    const double disc = std::hypot(0.5 * (g.a - g.d), g.b);
    const double s = half_tr + disc;  // larger eigenvalue, s >= 1

    NormPreservedDirections out;
    if (s <= 1.0 + 1e-10) {
        out.degenerate = true;
        out.t1 = {1.0, 0.0};
        out.t2 = {1.0, kHalfPi};
        return out;
    }
    // Eigenvector of G for s, from the better-conditioned row.
    double ex, ey;
    if (std::abs(s - g.a) > std::abs(s - g.d)) {
        ex = g.b;
        ey = s - g.a;
    } else {
        ex = s - g.d;
        ey = g.b;
    }
    const double en = std::hypot(ex, ey);
    ex /= en;
    ey /= en;
    const double a = 1.0 / std::sqrt(1.0 + s);
    const double b = std::sqrt(s) / std::sqrt(1.0 + s);
    auto principal = [](double x, double y) {
        double th = std::atan2(y, x);
        if (th < 0.0) th += kPi;
        if (th >= kPi) th -= kPi;
        return th;
    };
    out.t1 = {1.0, principal(a * ex - b * ey, a * ey + b * ex)};
    out.t2 = {1.0, principal(a * ex + b * ey, a * ey - b * ex)};
    return out;
}

std::array<double, 2> polygon_winding(const PolygonSpec& p, double sigma) {
    const NormPreservedDirections dirs = norm_preserved_directions(p, sigma);
    const double d1 =
        lifted_word_arg(p.angles, p.lengths, sigma, dirs.t1, WordVariant::T) -
        dirs.t1.arg;
    const double d2 =
        lifted_word_arg(p.angles, p.lengths, sigma, dirs.t2, WordVariant::T) -
        dirs.t2.arg;
    return d1 <= d2 ? std::array<double, 2>{d1, d2}
                    : std::array<double, 2>{d2, d1};
}

std::array<double, 2> polygon_psi(const PolygonSpec& p, double sigma) {
    auto d = polygon_winding(p, sigma);
    return {d[0] / (2.0 * kPi), d[1] / (2.0 * kPi)};
}

long polygon_counting(const PolygonSpec& p, double sigma) {
    const auto d = polygon_winding(p, sigma);
    const auto d0 = polygon_winding(p, 0.0);
    long count = 0;
    for (int j = 0; j < 2; ++j)
        count += static_cast<long>(std::floor(d[j] / (2.0 * kPi))) -
                 static_cast<long>(std::floor(d0[j] / (2.0 * kPi)));
    // sigma = 0 contributes once when it is a quasi-eigenvalue.
    const RealTrigPoly fp = polygon_char_poly(p);
    if (std::abs(fp.eval(0.0)) < 1e-7 * fp.amp_scale()) count += 1;
    return count;
}

}  // namespace steklov
