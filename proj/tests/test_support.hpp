#pragma once

// Shared generators for the property-style tests.

#include <random>

#include "blaschke/blaschke_product.hpp"

namespace blaschke::testing {

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex disc_point(double max_abs) {
        // Uniform in the disc of radius max_abs.
        const double r = max_abs * std::sqrt(uniform(0.0, 1.0));
        const double phi = uniform(0.0, kTwoPi);
        return Complex(r * std::cos(phi), r * std::sin(phi));
    }

    UnitComplex circle_point() { return UnitComplex::from_turns(uniform(0.0, 1.0)); }

    BlaschkeProduct product(int max_degree, double max_zero_abs = 0.8) {
        const int deg = uniform_int(1, max_degree);
        std::vector<DiscPoint> zeros;
        zeros.reserve(static_cast<size_t>(deg));
        for (int i = 0; i < deg; ++i) zeros.emplace_back(disc_point(max_zero_abs));
        return BlaschkeProduct(circle_point(), std::move(zeros));
    }

  private:
    std::mt19937_64 eng_;
};

/// The second example map: -((z - 0.4)/(1 - 0.4 z))^2.
inline BlaschkeProduct example_map_t1() {
    return BlaschkeProduct(UnitComplex(Complex(-1.0, 0.0)),
                           {DiscPoint(Complex(0.4, 0.0)), DiscPoint(Complex(0.4, 0.0))});
}

}  // namespace blaschke::testing
