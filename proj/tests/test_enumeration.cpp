#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "steklov/enumeration.hpp"
#include "steklov/geometry.hpp"
#include "steklov/presets.hpp"
#include "steklov/rootfind.hpp"
#include "steklov/transfer.hpp"

using namespace steklov;
namespace {
constexpr double kPi = std::numbers::pi;

AngleClass ang(double v) { return classify_angle(v, 1e-12); }

PolygonSpec random_safe_polygon(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> raw(0.25, kPi - 0.15);
    std::uniform_real_distribution<double> len(0.5, 2.0);
    std::vector<double> angles, lengths;
    while (static_cast<int>(angles.size()) < n) {
        const double a = raw(rng);
        bool safe = true;
        for (int k = 1; k <= 12; ++k)
            if (std::abs(a - kPi / (2 * k)) < 0.1) safe = false;
        if (!safe) continue;
        angles.push_back(a);
        lengths.push_back(len(rng));
    }
    return make_polygon(angles, lengths);
}

double wrap_to_pi(double x) {
    while (x > kPi) x -= 2 * kPi;
    while (x <= -kPi) x += 2 * kPi;
    return x;
}
}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("lifted rotations add their angle without wrapping") {
    const LiftedVector v{1.0, 0.0};
    CHECK(lift_rotate(v, 3 * kPi).arg == doctest::Approx(3 * kPi));
    CHECK(lift_rotate({2.0, kPi / 4}, -kPi / 2).arg == doctest::Approx(-kPi / 4));
    CHECK(lift_rotate({2.0, kPi / 4}, -kPi / 2).modulus == doctest::Approx(2.0));
    // a full turn is not the identity on the cover
    CHECK(lift_rotate(v, 2 * kPi).arg != doctest::Approx(v.arg));
}

TEST_CASE("symmetric maps fix eigendirections and stay within a quadrant") {
    const LiftedSymmetric s{3.7, kPi / 4};
    CHECK(lift_symmetric_apply(s, {1.0, kPi / 4}).arg == doctest::Approx(kPi / 4));
    CHECK(lift_symmetric_apply(s, {1.0, kPi / 4 + kPi}).arg ==
          doctest::Approx(kPi / 4 + kPi));
    const LiftedSymmetric id{1.0, kPi / 4};
    for (double a : {-2.0, 0.3, 5.0})
        CHECK(lift_symmetric_apply(id, {1.0, a}).arg == doctest::Approx(a));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> args(-8.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = args(rng);
        const double out = lift_symmetric_apply(s, {1.0, a}).arg;
        CHECK(std::abs(out - a) < kPi / 2);
    }
}

TEST_CASE("negative maps add pi on top of their positive version") {
    const LiftedSymmetric neg{-2.0, kPi / 4};
    const LiftedSymmetric pos{2.0, kPi / 4};
    for (double a : {-1.0, 0.6, 4.2})
        CHECK(lift_symmetric_apply(neg, {1.0, a}).arg ==
              doctest::Approx(lift_symmetric_apply(pos, {1.0, a}).arg + kPi));
}

TEST_CASE("argument monotonicity of symmetric maps") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> args(-6.0, 6.0);
    std::uniform_real_distribution<double> taus(0.05, 20.0);
    for (int trial = 0; trial < 200; ++trial) {
        const LiftedSymmetric s{taus(rng), kPi / 4};
        double a = args(rng);
        double b = args(rng);
        if (a > b) std::swap(a, b);
        if (a == b) continue;
        CHECK(lift_symmetric_apply(s, {1.0, a}).arg <
              lift_symmetric_apply(s, {1.0, b}).arg);
    }
}

TEST_CASE("word argument: plain rotation and the all-special triangle") {
    CHECK(lifted_word_arg({}, {1.7}, 2.0, {1.0, 0.0}, WordVariant::U) ==
          doctest::Approx(3.4));
    // three -identity vertex factors contribute pi each at sigma = 0
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    CHECK(lifted_word_arg(tri.angles, tri.lengths, 0.0, {1.0, 0.0},
                          WordVariant::T) == doctest::Approx(3 * kPi));
}

TEST_CASE("word argument grows strictly in sigma") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const PolygonSpec p = random_safe_polygon(rng, 4);
        double prev = lifted_word_arg(p.angles, p.lengths, 0.0, {1.0, 0.4},
                                      WordVariant::T);
        for (double s = 0.01; s < 3.0; s += 0.01) {
            const double cur =
                lifted_word_arg(p.angles, p.lengths, s, {1.0, 0.4}, WordVariant::T);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("lifted argument projects onto the plane argument") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> sig(0.0, 25.0);
    std::uniform_real_distribution<double> arg0(-kPi, kPi);
    for (int trial = 0; trial < 1000; ++trial) {
        const PolygonSpec p = random_safe_polygon(rng, 3);
        const double sigma = sig(rng);
        const double a0 = arg0(rng);
        const LiftedVector lifted = lifted_word_apply(
            p.angles, p.lengths, sigma, {1.0, a0}, WordVariant::T);
        const Mat2 t = sharp(polygon_transfer(p, sigma));
        const auto planar = t.apply(std::cos(a0), std::sin(a0));
        const double target = std::atan2(planar[1], planar[0]);
        CHECK(std::abs(wrap_to_pi(lifted.arg - target)) < 1e-9);
        CHECK(lifted.modulus ==
              doctest::Approx(std::hypot(planar[0], planar[1])).epsilon(1e-9));
    }
}

TEST_CASE("phi for one-piece zigzags") {
    const ZigzagSpec nn({}, {1.5}, Bc::N, Bc::N);
    const ZigzagSpec nd({}, {1.5}, Bc::N, Bc::D);
    for (double s : {0.0, 0.7, 2.9}) {
        CHECK(phi_zigzag(nn, s) == doctest::Approx(1.5 * s / kPi));
        CHECK(phi_zigzag(nd, s) == doctest::Approx(1.5 * s / kPi - 0.5));
    }
}

TEST_CASE("one-piece counting functions") {
    const double ell = 1.3;
    const ZigzagSpec nn({}, {ell}, Bc::N, Bc::N);
    const ZigzagSpec dd({}, {ell}, Bc::D, Bc::D);
    const ZigzagSpec nd({}, {ell}, Bc::N, Bc::D);
    const ZigzagSpec dn({}, {ell}, Bc::D, Bc::N);
    for (double s = 0.0; s < 12.0; s += 0.173) {
        const double x = ell * s / kPi;
        CHECK(zigzag_counting(nn, s) == static_cast<long>(std::floor(x)) + 1);
        CHECK(zigzag_counting(dd, s) == static_cast<long>(std::floor(x)));
        CHECK(zigzag_counting(nd, s) ==
              static_cast<long>(std::floor(x + 0.5)));
        CHECK(zigzag_counting(dn, s) ==
              static_cast<long>(std::floor(x + 0.5)));
    }
}

TEST_CASE("phi derivative stays positive and bounded") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 3; ++trial) {
        const PolygonSpec p = random_safe_polygon(rng, 3);
        const ZigzagSpec z(p.angles, {0.7, 1.1, 0.9, 1.3}, Bc::N, Bc::N);
        double prev = phi_zigzag(z, 0.0);
        for (double s = 1e-3; s < 4.0; s += 1e-3) {
            const double cur = phi_zigzag(z, s);
            CHECK(cur > prev);
            CHECK((cur - prev) / 1e-3 < 50.0);
            prev = cur;
        }
    }
}

TEST_CASE("two-side start rule switches on the quadrant of U(0) N") {
    // {mu/2pi} in [1/4, 3/4]: counting starts at the first non-positive root
    const double mu_in = 1.2 * kPi;  // fractional part 0.6
    const ZigzagSpec zin({ang(kPi * kPi / (2 * mu_in))}, {1.0, 1.0}, Bc::N,
                         Bc::N);
    CHECK(zigzag_counting(zin, 0.0) == 1);
    // {mu/2pi} = 0.9: counting starts at the first positive root
    const double mu_out = 1.8 * kPi;
    const ZigzagSpec zout({ang(kPi * kPi / (2 * mu_out))}, {1.0, 1.0}, Bc::N,
                          Bc::N);
    CHECK(zigzag_counting(zout, 0.0) == 0);
}

TEST_CASE("exceptional component counting values at zero") {
    // interior component between two odd exceptional vertices, one edge
    ExceptionalComponent y;
    y.lengths = {1.0};
    y.left_exceptional = ang(kPi / 2);
    y.right_exceptional = ang(kPi / 2);
    y.odd = false;
    CHECK(exceptional_component_counting(y, 0.0) == doctest::Approx(0.0));
    // roots of the odd-odd component polynomial sit at pi m
    CHECK(exceptional_component_counting(y, kPi + 0.01) == doctest::Approx(1.0));

    ExceptionalComponent mixed = y;
    mixed.right_exceptional = ang(kPi / 4);
    mixed.odd = true;
    CHECK(exceptional_component_counting(mixed, 0.01) == doctest::Approx(0.5));
}

TEST_CASE("norm preserved directions") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> sig(0.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const PolygonSpec p = random_safe_polygon(rng, 4);
        const double sigma = sig(rng);
        const auto dirs = norm_preserved_directions(p, sigma);
        const Mat2 t = sharp(polygon_transfer(p, sigma));
        for (const LiftedVector& v : {dirs.t1, dirs.t2}) {
            CHECK(v.arg >= 0.0);
            CHECK(v.arg < kPi);
            const auto image = t.apply(std::cos(v.arg), std::sin(v.arg));
            CHECK(std::hypot(image[0], image[1]) == doctest::Approx(1.0));
        }
    }
    // a pure rotation preserves everything: degenerate canonical pair
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    const auto dirs = norm_preserved_directions(tri, 0.83);
    CHECK(dirs.degenerate);
    CHECK(dirs.t1.arg == doctest::Approx(0.0));
    CHECK(dirs.t2.arg == doctest::Approx(kPi / 2));
}

TEST_CASE("winding functions are strictly increasing") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        const PolygonSpec p = random_safe_polygon(rng, 4);
        auto prev = polygon_winding(p, 0.0);
        for (double s = 1e-3; s < 3.0; s += 1e-3) {
            const auto cur = polygon_winding(p, s);
            CHECK(cur[0] > prev[0]);
            CHECK(cur[1] > prev[1]);
            prev = cur;
        }
    }
}

TEST_CASE("triangle counting function") {
    const PolygonSpec tri = preset_polygon("triangle-equilateral");
    CHECK(polygon_counting(tri, 0.0) == 0);
    CHECK(polygon_counting(tri, 1.2) == 2);
    CHECK(polygon_counting(tri, 3.2) == 4);
    CHECK(polygon_counting(tri, 5.3) == 6);
    // jump by two across each root (2m-1) pi / 3
    for (int m = 1; m <= 4; ++m) {
        const double root = (2 * m - 1) * kPi / 3;
        CHECK(polygon_counting(tri, root + 1e-6) -
                  polygon_counting(tri, root - 1e-6) ==
              2);
    }
}

TEST_CASE("counting matches the root scan for random polygons") {
    std::mt19937 rng(29);
    ScanOptions opts;
    opts.sigma_max = 20.0;
    for (int trial = 0; trial < 3; ++trial) {
        const PolygonSpec p = random_safe_polygon(rng, 5);
        const auto values = expand(polygon_spectrum(p, opts));
        for (double s = 0.05; s < opts.sigma_max; s += 0.11) {
            bool near_root = false;
            for (double r : values)
                if (std::abs(r - s) < 1e-6) near_root = true;
            if (near_root) continue;
            const long by_count =
                static_cast<long>(std::upper_bound(values.begin(), values.end(),
                                                   s) -
                                  values.begin());
            CHECK(polygon_counting(p, s) == by_count);
        }
    }
}

TEST_CASE("gluing: split zigzag counting matches on far-out windows") {
    std::mt19937 rng(31);
    const PolygonSpec p = random_safe_polygon(rng, 3);
    // split the middle edge of a 3-piece zigzag at its midpoint
    const ZigzagSpec whole(p.angles, {1.0, 2.0, 1.3, 0.8}, Bc::N, Bc::D);
    const ZigzagSpec left({p.angles[0], p.angles[1]}, {1.0, 2.0, 0.65},
                          Bc::N, Bc::D);
    const ZigzagSpec right({p.angles[2]}, {0.65, 0.8}, Bc::D, Bc::D);
    for (double base : {10.0, 25.0, 40.0}) {
        bool found = false;
        for (double s = base; s < base + 8.0 && !found; s += 0.01) {
            bool ok = true;
            for (double probe = s; probe < s + 0.05; probe += 0.01)
                if (zigzag_counting(left, probe) + zigzag_counting(right, probe) !=
                    zigzag_counting(whole, probe))
                    ok = false;
            found = ok;
        }
        CHECK(found);
    }
}

TEST_CASE("polygon counting agrees with cut zigzags on windows") {
    std::mt19937 rng(37);
    const PolygonSpec p = random_safe_polygon(rng, 4);
    // cut the polygon at the midpoint of its first side
    std::vector<double> cut_lengths;
    cut_lengths.push_back(p.lengths[0] / 2);
    for (std::size_t i = 1; i < p.size(); ++i) cut_lengths.push_back(p.lengths[i]);
    cut_lengths.push_back(p.lengths[0] / 2);
    const ZigzagSpec znn(p.angles, cut_lengths, Bc::N, Bc::N);
    const ZigzagSpec zdd(p.angles, cut_lengths, Bc::D, Bc::D);
    int nn_windows = 0, dd_windows = 0;
    for (double s = 5.0; s < 40.0; s += 0.01) {
        const long np = polygon_counting(p, s);
        if (np == zigzag_counting(znn, s)) ++nn_windows;
        if (np == zigzag_counting(zdd, s)) ++dd_windows;
    }
    CHECK(nn_windows > 50);
    CHECK(dd_windows > 50);
}

TEST_CASE("|2 psi - phi| stays below one") {
    std::mt19937 rng(41);
    const PolygonSpec p = random_safe_polygon(rng, 4);
    // cut at the midpoint of the first side; the cut zigzag runs through all
    // vertices and back
    std::vector<double> cut_lengths;
    cut_lengths.push_back(p.lengths[0] / 2);
    for (std::size_t i = 1; i < p.size(); ++i) cut_lengths.push_back(p.lengths[i]);
    cut_lengths.push_back(p.lengths[0] / 2);
    const ZigzagSpec znn(p.angles, cut_lengths, Bc::N, Bc::N);
    // polygon word anchored at the cut point: an auxiliary vertex with an
    // identity vertex matrix (even special angle) marks the cut
    std::vector<AngleClass> anchored_angles = p.angles;
    anchored_angles.push_back(ang(kPi / 5));
    const PolygonSpec anchored(anchored_angles, cut_lengths);
    // normalisation constants are half-integers fitted at sigma = 0
    const auto psi0 = polygon_psi(anchored, 0.0);
    const double phi0 = phi_zigzag(znn, 0.0);
    const std::array<double, 2> c{
        std::round(2 * (2 * psi0[0] - phi0)) / 2.0,
        std::round(2 * (2 * psi0[1] - phi0)) / 2.0};
    double sup = 0.0;
    for (double s = 0.0; s < 25.0; s += 0.02) {
        const auto psi = polygon_psi(anchored, s);
        const double phi = phi_zigzag(znn, s);
        sup = std::max({sup, std::abs(2 * psi[0] - phi - c[0]),
                        std::abs(2 * psi[1] - phi - c[1])});
    }
    CHECK(sup < 1.0);
}

}  // TEST_SUITE
