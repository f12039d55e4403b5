#include "steklov/geometry.hpp"

#include <cmath>
#include <numbers>

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;

AngleClass from_j(double value, int j) {
    AngleClass a;
    a.value = value;
    if (j % 2 == 0) {
        a.kind = AngleKind::Exceptional;
        a.k = j / 2;
    } else {
        a.kind = AngleKind::Special;
        a.k = (j - 1) / 2;
    }
    a.parity = (a.k % 2 == 0) ? 1 : -1;
    return a;
}

void check_range(double value, const ClassifyOptions& opts) {
    const double hi = opts.unsafe_angles ? 2.0 * kPi : kPi;
    if (!(value > 0.0) || !(value < hi))
        throw std::domain_error("angle " + std::to_string(value) +
                                " outside (0, " +
                                (opts.unsafe_angles ? std::string("2*pi)")
                                                    : std::string("pi)")));
}
}  // namespace

double mu_alpha(double alpha) { return kPi * kPi / (2.0 * alpha); }

AngleClass classify_angle(double value, const ClassifyOptions& opts) {
    check_range(value, opts);
    for (int j = 1; j <= opts.j_max; ++j) {
        if (std::abs(value - kPi / j) <= opts.tol_angle) return from_j(value, j);
    }
    AngleClass a;
    a.value = value;
    return a;
}

AngleClass classify_angle(double value, double tol_angle) {
    ClassifyOptions opts;
    opts.tol_angle = tol_angle;
    return classify_angle(value, opts);
}

AngleClass force_angle(double value, AngleKind kind, int k,
                       const ClassifyOptions& opts) {
    check_range(value, opts);
    AngleClass a;
    a.value = value;
    a.kind = kind;
    if (kind == AngleKind::Generic) return a;
    if (k < (kind == AngleKind::Exceptional ? 1 : 0))
        throw std::invalid_argument("forced angle class needs a valid k");
    a.k = k;
    a.parity = (k % 2 == 0) ? 1 : -1;
    return a;
}

PolygonSpec::PolygonSpec(std::vector<AngleClass> a, std::vector<double> l,
                         bool unsafe_angles)
    : angles(std::move(a)), lengths(std::move(l)) {
    if (angles.empty() || angles.size() != lengths.size())
        throw std::invalid_argument("polygon needs n >= 1 angles and lengths");
    const double hi = unsafe_angles ? 2.0 * kPi : kPi;
    for (const auto& ang : angles)
        if (!(ang.value > 0.0) || !(ang.value < hi))
            throw std::invalid_argument("polygon angle out of range");
    for (double len : lengths)
        if (!(len > 0.0)) throw std::invalid_argument("side lengths must be positive");
}

bool PolygonSpec::exceptional() const {
    for (const auto& a : angles)
        if (a.exceptional()) return true;
    return false;
}

bool PolygonSpec::all_special() const {
    for (const auto& a : angles)
        if (!a.special()) return false;
    return true;
}

PolygonSpec make_polygon(const std::vector<double>& angle_values,
                         const std::vector<double>& lengths,
                         const ClassifyOptions& opts) {
    std::vector<AngleClass> a;
    a.reserve(angle_values.size());
    for (double v : angle_values) a.push_back(classify_angle(v, opts));
    return PolygonSpec(std::move(a), lengths, opts.unsafe_angles);
}

ZigzagSpec::ZigzagSpec(std::vector<AngleClass> a, std::vector<double> l,
                       Bc start, Bc end, bool unsafe_angles)
    : angles(std::move(a)), lengths(std::move(l)), bc_start(start), bc_end(end) {
    if (lengths.empty() || angles.size() + 1 != lengths.size())
        throw std::invalid_argument("zigzag needs n >= 1 pieces and n-1 angles");
    const double hi = unsafe_angles ? 2.0 * kPi : kPi;
    for (const auto& ang : angles)
        if (!(ang.value > 0.0) || !(ang.value < hi))
            throw std::invalid_argument("zigzag angle out of range");
    for (double len : lengths)
        if (!(len > 0.0)) throw std::invalid_argument("side lengths must be positive");
}

bool ZigzagSpec::exceptional() const {
    for (const auto& a : angles)
        if (a.exceptional()) return true;
    return false;
}

ZigzagSpec make_zigzag(const std::vector<double>& angle_values,
                       const std::vector<double>& lengths, Bc start, Bc end,
                       const ClassifyOptions& opts) {
    std::vector<AngleClass> a;
    a.reserve(angle_values.size());
    for (double v : angle_values) a.push_back(classify_angle(v, opts));
    return ZigzagSpec(std::move(a), lengths, start, end, opts.unsafe_angles);
}

double ExceptionalComponent::total_length() const {
    double s = 0.0;
    for (double len : lengths) s += len;
    return s;
}

int ExceptionalDecomposition::odd_count() const {
    int c = 0;
    for (const auto& y : components) c += y.odd ? 1 : 0;
    return c;
}

ExceptionalDecomposition decompose(const PolygonSpec& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> exc;
    for (std::size_t i = 0; i < n; ++i)
        if (p.angles[i].exceptional()) exc.push_back(i);
    if (exc.empty()) throw std::invalid_argument("non-exceptional polygon");

    // Re-label so that the exceptional vertex of largest index becomes the
    // last vertex; component kappa then spans the sides strictly after the
    // previous exceptional vertex up to and including its own.
    const std::size_t shift = (exc.back() + 1) % n;
    auto ang = [&](std::size_t i) { return p.angles[(i + shift) % n]; };
    auto len = [&](std::size_t i) { return p.lengths[(i + shift) % n]; };

    std::vector<std::size_t> marks;  // positions of exceptional vertices, re-labelled
    for (std::size_t i = 0; i < n; ++i)
        if (ang(i).exceptional()) marks.push_back(i);

    ExceptionalDecomposition d;
    std::size_t begin = 0;
    for (std::size_t kappa = 0; kappa < marks.size(); ++kappa) {
        ExceptionalComponent y;
        for (std::size_t i = begin; i <= marks[kappa]; ++i) {
            y.lengths.push_back(len(i));
            y.edge_indices.push_back((i + shift) % n);
            if (i < marks[kappa]) y.interior_angles.push_back(ang(i));
        }
        y.left_exceptional =
            kappa == 0 ? ang(marks.back()) : ang(marks[kappa - 1]);
        y.right_exceptional = ang(marks[kappa]);
        y.odd = y.left_exceptional.parity != y.right_exceptional.parity;
        d.components.push_back(std::move(y));
        begin = marks[kappa] + 1;
    }
    return d;
}

ZigzagDecomposition decompose(const ZigzagSpec& z) {
    std::vector<std::size_t> exc;
    for (std::size_t i = 0; i < z.angles.size(); ++i)
        if (z.angles[i].exceptional()) exc.push_back(i);
    if (exc.empty()) throw std::invalid_argument("non-exceptional zigzag");

    ZigzagDecomposition d;
    d.start.exceptional = z.angles[exc.front()];
    for (std::size_t i = 0; i <= exc.front(); ++i) {
        d.start.lengths.push_back(z.lengths[i]);
        if (i < exc.front()) d.start.interior_angles.push_back(z.angles[i]);
    }
    for (std::size_t kappa = 1; kappa < exc.size(); ++kappa) {
        ExceptionalComponent y;
        for (std::size_t i = exc[kappa - 1] + 1; i <= exc[kappa]; ++i) {
            y.lengths.push_back(z.lengths[i]);
            y.edge_indices.push_back(i);
            if (i < exc[kappa]) y.interior_angles.push_back(z.angles[i]);
        }
        y.left_exceptional = z.angles[exc[kappa - 1]];
        y.right_exceptional = z.angles[exc[kappa]];
        y.odd = y.left_exceptional.parity != y.right_exceptional.parity;
        d.interior.push_back(std::move(y));
    }
    d.end.exceptional = z.angles[exc.back()];
    for (std::size_t i = exc.back() + 1; i < z.lengths.size(); ++i) {
        d.end.lengths.push_back(z.lengths[i]);
        if (i + 1 < z.lengths.size()) d.end.interior_angles.push_back(z.angles[i]);
    }
    return d;
}

double perimeter(const PolygonSpec& p) {
    double s = 0.0;
    for (double len : p.lengths) s += len;
    return s;
}

double total_length(const ZigzagSpec& z) {
    double s = 0.0;
    for (double len : z.lengths) s += len;
    return s;
}

}  // namespace steklov
