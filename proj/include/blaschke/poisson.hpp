#pragma once

// Poisson kernels on the circle, harmonic extension to the disc, and the
// pushforward identity  int f.T P_x dm = int f P_{T(x)} dm.

#include <span>

#include "blaschke/blaschke_product.hpp"
#include "blaschke/circle_grid.hpp"

namespace blaschke {

/// P_x(z) = (1 - |x|^2) / |z - x|^2 for z on the circle.
double poisson_density(const DiscPoint& x, Complex z_on_circle);

inline double poisson_density(const DiscPoint& x, const UnitComplex& z) {
    return poisson_density(x, z.value());
}

class PoissonKernel {
  public:
    explicit PoissonKernel(DiscPoint pole) : pole_(pole) {}
    double operator()(Complex z) const { return poisson_density(pole_, z); }
    const DiscPoint& pole() const { return pole_; }

  private:
    DiscPoint pole_;
};

/// Sup-norm bound ||P_x - P_y||_inf <= 12 |x - y| / ((1-|x|)^2 (1-|y|)^2).
double poisson_supnorm_diff_bound(const DiscPoint& x, const DiscPoint& y);

/// Quadrature of f(z) P_x(z) dm(z); reproduces x^k on f(z) = z^k.
Complex harmonic_extension(const CircleGrid& grid, std::span<const Complex> f_values,
                           const DiscPoint& x);

template <typename F>
Complex harmonic_extension(const CircleGrid& grid, F&& f, const DiscPoint& x) {
    Complex s(0.0, 0.0);
    for (const Complex& z : grid.nodes()) s += Complex(f(z)) * poisson_density(x, z);
    return s / static_cast<double>(grid.size());
}

/// max_{k <= k_max} | int (T z)^k P_x dm  -  T(x)^k |   (both sides by the
/// closed form on the right, quadrature on the left).
double pushforward_identity_residual(const BlaschkeProduct& map, const DiscPoint& x,
                                     int k_max, const CircleGrid& grid);

/// phi_x(z) = (z + x)/(1 + conj(x) z), the disc automorphism sending 0 to x.
Complex mobius_to(const DiscPoint& x, Complex z);

/// max_{1 <= k <= k_max} | int z^k dmu_x - int phi_x(z)^k dm |, both by
/// quadrature; checks mu_x = (phi_x)_* m.
double mobius_transport_residual(const DiscPoint& x, const CircleGrid& grid, int k_max = 6);

}  // namespace blaschke
