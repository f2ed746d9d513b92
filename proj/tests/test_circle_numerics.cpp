#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "blaschke/circle_grid.hpp"
#include "blaschke/lift.hpp"
#include "test_support.hpp"

using namespace blaschke;
using blaschke::testing::Gen;
using blaschke::testing::example_map_t1;

TEST_CASE("quadrature: constants, monomial orthogonality, and log |z - a|^2") {
    const CircleGrid grid(4096);
    CHECK(quadrature(grid, [](Complex) { return 3.25; }) == doctest::Approx(3.25).epsilon(1e-15));
    for (int k : {1, 2, 5}) {
        const Complex v = quadrature(grid, [k](Complex z) {
            Complex w(1.0, 0.0);
            for (int i = 0; i < k; ++i) w *= z;
            return w;
        });
        CHECK(std::abs(v) < 1e-14);
    }
    // The mean of log |z - a|^2 over the circle vanishes for |a| < 1.
    const auto logdist = [](Complex z) { return std::log(std::norm(z - Complex(0.4, 0.0))); };
    CHECK(std::abs(quadrature(grid, logdist)) < 1e-10);
    const CircleGrid fine(32768);
    CHECK(std::abs(quadrature(grid, logdist) - quadrature(fine, logdist)) < 1e-10);
}

TEST_CASE("grid function interpolation is exact on low trig polynomials") {
    const CircleGrid grid(64);
    const auto f = [](double t) { return 1.5 + std::cos(3 * kTwoPi * t) - 2.0 * std::sin(7 * kTwoPi * t); };
    std::vector<double> v;
    for (int j = 0; j < grid.size(); ++j) v.push_back(f(grid.t(j)));
    const GridFunction gf(grid, v);
    Gen gen(3);
    for (int i = 0; i < 200; ++i) {
        const double t = gen.uniform(0.0, 1.0);
        CHECK(std::abs(gf(t) - f(t)) < 1e-11);
    }
    CHECK(gf(grid.t(17)) == doctest::Approx(f(grid.t(17))).epsilon(1e-14));
}

TEST_CASE("lifts of the squaring map and of rotations are affine") {
    const CircleLift sq(BlaschkeProduct::power_map(2));
    Gen gen(9);
    for (int i = 0; i < 50; ++i) {
        const double t = gen.uniform(0.0, 1.0);
        CHECK(std::abs(sq(t) - 2.0 * t) < 1e-12);
    }
    const double alpha = 0.2137;
    const BlaschkeProduct rot(UnitComplex::from_turns(alpha), {DiscPoint(Complex(0.0, 0.0))});
    const CircleLift lift_rot(rot);
    for (int i = 0; i < 50; ++i) {
        const double t = gen.uniform(0.0, 1.0);
        CHECK(std::abs(lift_rot(t) - (t + alpha)) < 1e-12);
    }
}

TEST_CASE("lift of the example map: winding two, fixed slope minimum at t = 1/2") {
    const CircleLift lift(example_map_t1());
    CHECK(lift.degree() == 2);
    CHECK(std::abs(lift(1.0) - lift(0.0) - 2.0) < 1e-12);
    // T1(1) = -1 and T1(-1) = -1: S(0) = 1/2 and S(1/2) = 3/2.
    CHECK(lift(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lift(0.5) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(lift.slope(0.5) == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
    double min_slope = 1e9;
    double argmin = -1.0;
    for (int j = 0; j < 512; ++j) {
        const double s = lift.slope(j / 512.0);
        if (s < min_slope) {
            min_slope = s;
            argmin = j / 512.0;
        }
    }
    CHECK(argmin == doctest::Approx(0.5));
    CHECK(min_slope == doctest::Approx(6.0 / 7.0));
}

TEST_CASE("lift consistency: exp(2 pi i S(t)) = T(e^{2 pi i t}), monotone slopes") {
    Gen gen(21);
    for (int i = 0; i < 10; ++i) {
        const BlaschkeProduct map = gen.product(5, 0.85);
        const CircleLift lift(map);
        double prev = lift(0.0) - 1.0;
        for (int j = 0; j < 777; ++j) {
            const double t = j / 777.0;
            const double s = lift(t);
            CHECK(s > prev);
            prev = s;
            const Complex expect = map.eval(UnitComplex::from_turns(t).value());
            CHECK(std::abs(UnitComplex::from_turns(s).value() - expect) < 1e-10);
        }
        const double h = 1e-6;
        for (int k = 0; k < 5; ++k) {
            const double t = gen.uniform(0.0, 1.0);
            const double fd = (lift(t + h) - lift(t - h)) / (2.0 * h);
            CHECK(std::abs(fd - lift.slope(t)) / lift.slope(t) < 1e-6);
        }
    }
}

TEST_CASE("lift construction refuses zeros essentially on the circle") {
    CHECK_THROWS_AS(CircleLift(BlaschkeProduct(UnitComplex(Complex(1.0, 0.0)),
                                               {DiscPoint(Complex(1.0 - 2e-9, 0.0))})),
                    WindingMismatch);
}

TEST_CASE("preimages of the squaring map and the example map") {
    const BlaschkeProduct sq = BlaschkeProduct::power_map(2);
    const auto roots1 = preimages(sq, UnitComplex(Complex(1.0, 0.0)));
    REQUIRE(roots1.size() == 2);
    CHECK(std::abs(roots1[0].value() - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(roots1[1].value() - Complex(-1.0, 0.0)) < 1e-12);

    const auto roots2 = preimages(sq, UnitComplex(Complex(0.0, 1.0)));
    REQUIRE(roots2.size() == 2);
    CHECK(std::abs(roots2[0].value() - UnitComplex::from_turns(0.125).value()) < 1e-12);
    CHECK(std::abs(roots2[1].value() - UnitComplex::from_turns(0.625).value()) < 1e-12);

    const auto roots3 = preimages(example_map_t1(), UnitComplex(Complex(-1.0, 0.0)));
    REQUIRE(roots3.size() == 2);
    bool found_fixed = false;
    for (const UnitComplex& w : roots3) {
        if (std::abs(w.value() - Complex(-1.0, 0.0)) < 1e-10) found_fixed = true;
    }
    CHECK(found_fixed);
}

TEST_CASE("preimages verify against direct evaluation for random maps") {
    Gen gen(31);
    for (int i = 0; i < 25; ++i) {
        const BlaschkeProduct map = gen.product(5, 0.85);
        const CircleLift lift(map);
        const UnitComplex z = gen.circle_point();
        const auto roots = preimages(lift, z);
        CHECK(static_cast<int>(roots.size()) == map.degree());
        for (const UnitComplex& w : roots) {
            CHECK(std::abs(map.eval(w.value()) - z.value()) < 1e-10);
        }
        for (size_t a = 0; a < roots.size(); ++a) {
            for (size_t b = a + 1; b < roots.size(); ++b) {
                CHECK(std::abs(roots[a].value() - roots[b].value()) > 1e-8);
            }
        }
    }
}

TEST_CASE("arc image measures") {
    const BlaschkeProduct sq = BlaschkeProduct::power_map(2);
    CHECK(arc_image_measure(sq, 0.1, 0.4) == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(arc_image_measure(sq, 0.2, 0.8) == doctest::Approx(1.0));
    const double grown = arc_image_measure(example_map_t1(), 0.45, 0.55);
    CHECK(grown >= (6.0 / 7.0) * 0.1 - 1e-12);
    CHECK(grown <= 1.0);
}
