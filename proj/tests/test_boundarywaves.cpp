#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steklov/boundarywaves.hpp"
#include "steklov/geometry.hpp"
#include "steklov/presets.hpp"
#include "steklov/rootfind.hpp"
#include "steklov/transfer.hpp"

using namespace steklov;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("boundarywaves") {

TEST_CASE("all-special polygon: waves are global trigonometric traces") {
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    const double sigma = 5 * kPi / 3;
    const auto basis = solve_wave_basis(tri, sigma);
    REQUIRE(basis.size() == 2);
    for (const auto& w : basis) {
        CHECK(transfer_residual(tri, w) < 1e-9);
        CHECK(wave_inner_product(w, w) == doctest::Approx(1.0).epsilon(1e-10));
        // a single global wave sqrt(2/L) trig(sigma s): equal measure on the
        // coefficient moduli across all edges
        const double ref = std::abs(w.c_in[0].c);
        for (const auto& c : w.c_in) CHECK(std::abs(c.c) == doctest::Approx(ref));
        // trace amplitude 2|c| matches sqrt(2/L)
        CHECK(2.0 * ref == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-8));
    }
    CHECK(std::abs(wave_inner_product(basis[0], basis[1])) < 1e-10);
}

TEST_CASE("square: four waves each supported on a single side") {
    const PolygonSpec sq = preset_polygon("square");
    const auto basis = solve_wave_basis(sq, kPi / 2);
    REQUIRE(basis.size() == 4);
    std::vector<int> hot;
    for (const auto& w : basis) {
        CHECK(transfer_residual(sq, w) < 1e-9);
        const auto mass = edge_mass_distribution(w);
        int big = -1;
        double total = 0.0;
        for (std::size_t j = 0; j < mass.size(); ++j) {
            total += mass[j];
            if (mass[j] > 0.5) big = static_cast<int>(j);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        REQUIRE(big >= 0);
        CHECK(mass[big] == doctest::Approx(1.0).epsilon(1e-12));
        hot.push_back(big);
    }
    std::sort(hot.begin(), hot.end());
    CHECK(hot == std::vector<int>{0, 1, 2, 3});
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            CHECK(std::abs(wave_inner_product(basis[a], basis[b])) < 1e-12);
}

TEST_CASE("T1: waves at pi (m - 1/2) / sqrt 2 concentrate on the hypotenuse") {
    const PolygonSpec t1 = preset_polygon("T1");
    const double sigma = kPi * 2.5 / std::sqrt(2.0);
    const auto w = solve_wave(t1, sigma);
    const auto mass = edge_mass_distribution(w);
    CHECK(mass[1] == doctest::Approx(1.0));  // the sqrt(2) side
    CHECK(transfer_residual(t1, w) < 1e-9);
}

TEST_CASE("T1 zero mode lives on the odd components") {
    const PolygonSpec t1 = preset_polygon("T1");
    const auto basis = solve_wave_basis(t1, 0.0);
    REQUIRE(basis.size() == 1);  // multiplicity of sigma = 0 is one
    CHECK(wave_inner_product(basis[0], basis[0]) == doctest::Approx(1.0));
}

TEST_CASE("requesting waves off the spectrum fails") {
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    CHECK_THROWS_AS(solve_wave(tri, 1.0), std::invalid_argument);
    const PolygonSpec t1 = preset_polygon("T1");
    const double single = kPi * 0.5 / std::sqrt(2.0);
    const auto first = solve_wave(t1, single);
    CHECK_THROWS_AS(solve_wave(t1, single, {}, &first), std::invalid_argument);
}

TEST_CASE("pentagon: simple and double eigenvalues give orthonormal waves") {
    const PolygonSpec pent = preset_polygon("pentagon");
    ScanOptions opts;
    opts.sigma_max = 9.0;
    const auto spec = polygon_spectrum(pent, opts);
    for (const auto& q : spec) {
        const auto basis = solve_wave_basis(pent, q.sigma, opts);
        CHECK(static_cast<int>(basis.size()) == q.multiplicity);
        for (std::size_t a = 0; a < basis.size(); ++a) {
            CHECK(transfer_residual(pent, basis[a]) < 1e-9);
            CHECK(wave_inner_product(basis[a], basis[a]) ==
                  doctest::Approx(1.0).epsilon(1e-10));
            for (std::size_t b = 0; b < a; ++b)
                CHECK(std::abs(wave_inner_product(basis[a], basis[b])) < 1e-10);
        }
    }
}

TEST_CASE("near-orthogonality of distinct waves") {
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    ScanOptions opts;
    opts.sigma_max = 45.0;
    const auto spec = polygon_spectrum(tri, opts);
    std::vector<BoundaryQuasiWave> waves;
    for (const auto& q : spec)
        for (const auto& w : solve_wave_basis(tri, q.sigma, opts))
            waves.push_back(w);
    double fitted = 0.0;
    for (std::size_t a = 0; a < waves.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            const double ip = std::abs(wave_inner_product(waves[a], waves[b]));
            fitted = std::max(fitted,
                              ip * (waves[a].sigma + waves[b].sigma));
        }
    CHECK(fitted <= 8.0);
}

TEST_CASE("equidistribution for the all-special triangle") {
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    for (int m : {3, 9, 15, 25}) {
        const double sigma = (2 * m - 1) * kPi / 3;
        const auto w = solve_wave(tri, sigma);
        const auto mass = edge_mass_distribution(w);
        for (double v : mass)
            CHECK(std::abs(v - 1.0 / 3.0) < 2.0 / sigma);
    }
}

TEST_CASE("zigzag wave satisfies the end condition at its roots") {
    const ZigzagSpec z({classify_angle(2 * kPi / 3, 1e-12)}, {1.0, 1.3},
                       Bc::N, Bc::D);
    ScanOptions opts;
    opts.sigma_max = 12.0;
    const auto spec = zigzag_spectrum(z, opts);
    REQUIRE(!spec.empty());
    for (const auto& q : spec) {
        if (q.sigma <= 0.0) continue;
        const auto w = solve_zigzag_wave(z, q.sigma, opts);
        // incoming coefficient at the end point must be proportional to the
        // Dirichlet vector: orthogonal to N
        const double residual =
            std::abs(conj_dot(w.c_in.back(), bc_vector_perp(Bc::D)));
        CHECK(residual < 1e-9);
        CHECK(wave_inner_product(w, w) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

}  // TEST_SUITE
