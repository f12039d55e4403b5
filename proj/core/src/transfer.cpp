#include "steklov/transfer.hpp"

#include <cmath>
#include <numbers>

namespace steklov {

namespace {
constexpr double kPi = std::numbers::pi;
const cd kI{0.0, 1.0};
}  // namespace

ConjMatrix vertex_matrix(const AngleClass& a) {
    if (a.exceptional())
        throw std::domain_error("vertex matrix undefined at an exceptional angle");
    const double mu = mu_alpha(a.value);
    const double s = std::sin(mu);
    return ConjMatrix{cd{1.0 / s, 0.0}, -kI * (std::cos(mu) / s)};
}

ConjMatrix side_matrix(double length, double sigma) {
    if (!(length > 0.0)) throw std::domain_error("side length must be positive");
    return ConjMatrix{std::polar(1.0, length * sigma), cd{0.0, 0.0}};
}

ConjMatrix polygon_transfer(const PolygonSpec& p, double sigma) {
    ConjMatrix t = ConjMatrix::identity();
    for (std::size_t j = 0; j < p.size(); ++j)
        t = vertex_matrix(p.angles[j]) * side_matrix(p.lengths[j], sigma) * t;
    return t;
}

ConjMatrix component_transfer(const std::vector<AngleClass>& interior_angles,
                              const std::vector<double>& lengths,
                              double sigma) {
    if (lengths.size() != interior_angles.size() + 1)
        throw std::invalid_argument("component needs one more length than angles");
    ConjMatrix u = side_matrix(lengths[0], sigma);
    for (std::size_t j = 0; j < interior_angles.size(); ++j)
        u = side_matrix(lengths[j + 1], sigma) * vertex_matrix(interior_angles[j]) * u;
    return u;
}

ConjMatrix zigzag_transfer(const ZigzagSpec& z, double sigma) {
    return component_transfer(z.angles, z.lengths, sigma);
}

double vertex_eigenvalue_odd(const AngleClass& a) {
    return std::tan(mu_alpha(a.value) / 2.0);
}

double vertex_eigenvalue_even(const AngleClass& a) {
    return 1.0 / std::tan(mu_alpha(a.value) / 2.0);
}

ConjVector x_even() { return ConjVector{std::polar(1.0 / std::sqrt(2.0), -kPi / 4.0)}; }
ConjVector x_odd() { return ConjVector{std::polar(1.0 / std::sqrt(2.0), kPi / 4.0)}; }

ConjVector x_of_parity(int parity) { return parity > 0 ? x_even() : x_odd(); }
ConjVector x_perp_of_parity(int parity) { return parity > 0 ? x_odd() : x_even(); }

ConjVector bc_vector(Bc b) { return b == Bc::N ? ConjVector{cd{1.0, 0.0}} : ConjVector{kI}; }
ConjVector bc_vector_perp(Bc b) { return bc_vector(b == Bc::N ? Bc::D : Bc::N); }

double conj_dot(const ConjVector& u, const ConjVector& v) {
    return 2.0 * (u.c * std::conj(v.c)).real();
}

}  // namespace steklov
