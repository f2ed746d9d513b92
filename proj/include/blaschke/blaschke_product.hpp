#pragma once

// Finite Blaschke products: unimodular rotation times a product of Moebius
// factors (z - a)/(1 - conj(a) z) with all zeros strictly inside the disc.

#include <complex>
#include <vector>

#include "blaschke/errors.hpp"

namespace blaschke {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Zeros must stay at least this far from the unit circle.
inline constexpr double kBoundaryEps = 1e-9;
/// eval() refuses factors with |1 - conj(a) z| below this.
inline constexpr double kPoleEps = 1e-12;
/// Default residual tolerance for root finding / branch inversion.
inline constexpr double kRootTol = 1e-10;

/// A point of the unit circle; renormalized to |z| = 1 on construction.
class UnitComplex {
  public:
    explicit UnitComplex(Complex z);
    UnitComplex() : value_(1.0, 0.0) {}

    /// e^{2 pi i t}
    static UnitComplex from_turns(double t);

    Complex value() const { return value_; }
    /// Argument in turns, in [0, 1).
    double turns() const;

  private:
    Complex value_;
};

/// A point strictly inside the unit disc (|z| < 1 - kBoundaryEps).
class DiscPoint {
  public:
    explicit DiscPoint(Complex z);
    DiscPoint() : value_(0.0, 0.0) {}

    Complex value() const { return value_; }
    double abs() const { return std::abs(value_); }

  private:
    Complex value_;
};

class BlaschkeProduct {
  public:
    BlaschkeProduct(UnitComplex rotation, std::vector<DiscPoint> zeros);

    int degree() const { return static_cast<int>(zeros_.size()); }
    const UnitComplex& rotation() const { return rotation_; }
    const std::vector<DiscPoint>& zeros() const { return zeros_; }

    /// rotation * prod (z - a_i)/(1 - conj(a_i) z). Throws PoleHit near 1/conj(a_i).
    Complex eval(Complex z) const;

    /// T'(z), valid everywhere away from poles (including at zeros of T).
    Complex derivative(Complex z) const;

    /// T''(z). Requires z away from the zeros (always true on the circle).
    Complex second_derivative(Complex z) const;

    /// |T'(z)| for z on the circle: sum_i (1 - |a_i|^2) / |z - a_i|^2.
    double deriv_modulus_on_circle(const UnitComplex& z) const;

    /// The product theta * T (a Blaschke product with rotated prefactor).
    BlaschkeProduct rotated(const UnitComplex& theta) const;

    /// Upper bound sum_i (1 + |a_i|)/(1 - |a_i|) >= sup |T'| on the circle.
    double sup_deriv_bound() const;

    /// z^n (n zeros at the origin).
    static BlaschkeProduct power_map(int n);

  private:
    UnitComplex rotation_;
    std::vector<DiscPoint> zeros_;
};

inline double deriv_modulus_on_circle(const BlaschkeProduct& map, const UnitComplex& z) {
    return map.deriv_modulus_on_circle(z);
}

}  // namespace blaschke
