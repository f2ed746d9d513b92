#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "blaschke/cocycle_path.hpp"
#include "test_support.hpp"

using namespace blaschke;
using blaschke::testing::Gen;
using blaschke::testing::example_map_t1;

namespace {

MapTable example_table() {
    return MapTable({BlaschkeProduct::power_map(2), example_map_t1()});
}

}  // namespace

TEST_CASE("driving validation") {
    CHECK_THROWS_AS(DrivingSystem::bernoulli({0.2, 0.7}), std::invalid_argument);
    CHECK_THROWS_AS(DrivingSystem::bernoulli({-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(DrivingSystem::rotation(0.3, {0.0, 0.5, 0.4, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DrivingSystem::rotation(0.3, {0.1, 1.0}), std::invalid_argument);
    const DrivingSystem rot = DrivingSystem::rotation(1.0 / kPi, {0.0, 0.2, 1.0});
    CHECK(rot.alphabet_size() == 2);
    CHECK(rot.symbol_probabilities()[0] == doctest::Approx(0.2));
    CHECK(rot.symbol_of_point(0.19) == 0);
    CHECK(rot.symbol_of_point(0.2) == 1);
}

TEST_CASE("single-symbol alphabets realize constant paths") {
    const CocyclePath path(DrivingSystem::bernoulli({1.0}), MapTable({example_map_t1()}), 99, 50,
                           50);
    for (int j = -50; j <= 50; ++j) CHECK(path.symbol(j) == 0);
}

TEST_CASE("bernoulli symbol frequencies match the probabilities") {
    const CocyclePath path(DrivingSystem::bernoulli({0.2, 0.8}), example_table(), 2024, 0,
                           1000000);
    int count0 = 0;
    for (int j = 0; j < 1000000; ++j) count0 += path.symbol(j) == 0 ? 1 : 0;
    // 3 sigma of Binomial(1e6, 0.2) is ~1.2e-3.
    CHECK(std::abs(count0 / 1e6 - 0.2) < 1.2e-3);
}

TEST_CASE("rotation driving equidistributes the partition") {
    const CocyclePath path(DrivingSystem::rotation(1.0 / kPi, {0.0, 0.2, 1.0}), example_table(),
                           77, 0, 1000000);
    int count0 = 0;
    for (int j = 0; j < 1000000; ++j) count0 += path.symbol(j) == 0 ? 1 : 0;
    CHECK(std::abs(count0 / 1e6 - 0.2) < 1e-4);
}

TEST_CASE("paths are reproducible bit for bit and shifts reindex the window") {
    const DrivingSystem d = DrivingSystem::bernoulli({0.2, 0.8});
    const CocyclePath a(d, example_table(), 31337, 200, 200);
    const CocyclePath b(d, example_table(), 31337, 200, 200);
    for (int j = -200; j <= 200; ++j) CHECK(a.symbol(j) == b.symbol(j));
    const CocyclePath c(d, example_table(), 31338, 200, 200);
    int differs = 0;
    for (int j = -200; j <= 200; ++j) differs += a.symbol(j) != c.symbol(j) ? 1 : 0;
    CHECK(differs > 0);

    const CocyclePath s = a.shifted(3);
    CHECK(s.n_back() == 203);
    CHECK(s.n_fwd() == 197);
    for (int j = -203; j <= 197; ++j) CHECK(s.symbol(j) == a.symbol(j + 3));
}

TEST_CASE("forward composition: powers of the squaring map and a manual oracle") {
    const CocyclePath path(DrivingSystem::bernoulli({1.0}),
                           MapTable({BlaschkeProduct::power_map(2)}), 5, 0, 10);
    const Complex z = UnitComplex::from_turns(0.1).value();
    CHECK(path.forward_compose(0, 0, z) == z);
    CHECK(std::abs(path.forward_compose(0, 3, z) - UnitComplex::from_turns(0.8).value()) < 1e-12);

    Gen gen(101);
    const CocyclePath mixed(DrivingSystem::bernoulli({0.2, 0.8}), example_table(), 404, 10, 30);
    for (int rep = 0; rep < 5; ++rep) {
        const Complex w0 = gen.disc_point(0.8);
        const int j = gen.uniform_int(-5, 5);
        const int n = gen.uniform_int(0, 12);
        Complex expect = w0;
        for (int k = 0; k < n; ++k) {
            expect = mixed.table().map(mixed.symbol(j + k)).eval(expect);
        }
        CHECK(std::abs(mixed.forward_compose(j, n, w0) - expect) < 1e-12);
    }
}

TEST_CASE("composition is a cocycle over the shift") {
    const CocyclePath path(DrivingSystem::bernoulli({0.2, 0.8}), example_table(), 11, 20, 60);
    Gen gen(55);
    for (int rep = 0; rep < 20; ++rep) {
        const Complex z = gen.disc_point(0.9);
        const int j = gen.uniform_int(-10, 10);
        const int n = gen.uniform_int(0, 15);
        const int m = gen.uniform_int(0, 15);
        const Complex once = path.forward_compose(j, n + m, z);
        const Complex twice = path.forward_compose(j + n, m, path.forward_compose(j, n, z));
        CHECK(once == twice);  // identical floating point operations
    }
}

TEST_CASE("backward composition heads to the attracting boundary point under T1 only") {
    const CocyclePath path(DrivingSystem::bernoulli({1.0}), MapTable({example_map_t1()}), 1, 400,
                           0);
    CHECK(std::abs(path.backward_compose_at_zero(0)) == 0.0);
    double prev = 0.0;
    for (int n : {50, 100, 200, 400}) {
        const double r = std::abs(path.backward_compose_at_zero(n));
        CHECK(r >= prev);
        prev = r;
    }
    CHECK(std::abs(path.backward_compose_at_zero(400) - Complex(-1.0, 0.0)) < 1e-6);
}

TEST_CASE("theta enters every factor of the compositions") {
    const DrivingSystem d = DrivingSystem::bernoulli({0.2, 0.8});
    const CocyclePath plain(d, example_table(), 12, 30, 30);
    const CocyclePath zero_turns(d, example_table(), 12, 30, 30, UnitComplex::from_turns(0.0));
    const CocyclePath rotated(d, example_table(), 12, 30, 30, UnitComplex::from_turns(0.25));
    const Complex z(0.3, -0.2);
    CHECK(plain.forward_compose(-5, 17, z) == zero_turns.forward_compose(-5, 17, z));
    CHECK(plain.backward_compose(25, z) == zero_turns.backward_compose(25, z));

    Complex manual = z;
    const Complex th = UnitComplex::from_turns(0.25).value();
    for (int k = 25; k >= 1; --k) {
        manual = th * rotated.table().map(rotated.symbol(-k)).eval(manual);
    }
    CHECK(std::abs(rotated.backward_compose(25, z) - manual) < 1e-15);
}

TEST_CASE("uniform contraction radius") {
    CHECK(uniform_contraction_radius(MapTable({BlaschkeProduct::power_map(2)}), 0.5) ==
          doctest::Approx(0.25).epsilon(1e-12));
    const BlaschkeProduct rot(UnitComplex::from_turns(0.31), {DiscPoint(Complex(0.0, 0.0))});
    CHECK(uniform_contraction_radius(MapTable({rot}), 0.7) == doctest::Approx(0.7).epsilon(1e-12));
    // The two-map example is expanding on average but not uniformly
    // contracting on any D_R.
    CHECK(uniform_contraction_radius(example_table(), 0.5) > 0.5);
}
