#pragma once

// Random fixed point by backward iteration, the random invariant density
// (the Poisson kernel at that point), the pointwise transfer operator, and
// the convergence diagnostics around L^(n) 1 = P at the backward orbit.

#include <functional>
#include <optional>
#include <utility>

#include "blaschke/circle_grid.hpp"
#include "blaschke/cocycle_path.hpp"
#include "blaschke/lift.hpp"
#include "blaschke/poisson.hpp"

namespace blaschke {

enum class FixedPointStatus { Converged, BoundaryDivergence, MaxIterations };

struct FixedPointOptions {
    double tol = 1e-12;
    int max_n = 10000;
    Complex z0 = Complex(0.0, 0.0);
    /// Iterates with |z| above 1 - boundary_band count toward divergence.
    double boundary_band = 1e-6;
    /// Consecutive near-boundary iterates before declaring divergence.
    int boundary_run = 50;
};

struct RandomFixedPointResult {
    FixedPointStatus status = FixedPointStatus::MaxIterations;
    std::optional<DiscPoint> x_omega;
    std::vector<Complex> iterates;  // T^(n) at z0, n = 0..n_used
    /// exp of the least-squares slope of log successive differences
    /// (fitted on the last half of the difference sequence).
    std::optional<double> fitted_rate;
    int n_used = 0;
};

RandomFixedPointResult random_fixed_point(const CocyclePath& path,
                                          const FixedPointOptions& opts = {});

/// Pointwise transfer operator of one Blaschke product:
/// (L f)(z) = sum over preimages w of f(w)/|T'(w)|.
class TransferOperator {
  public:
    explicit TransferOperator(BlaschkeProduct map) : map_(map), lift_(std::move(map)) {}

    GridFunction apply(const CircleGrid& grid, const std::function<double(Complex)>& f) const;
    GridFunction apply(const GridFunction& f) const;

    const BlaschkeProduct& map() const { return map_; }

  private:
    BlaschkeProduct map_;
    CircleLift lift_;
};

inline GridFunction transfer_apply(const BlaschkeProduct& map, const GridFunction& f) {
    return TransferOperator(map).apply(f);
}
inline GridFunction transfer_apply(const BlaschkeProduct& map, const CircleGrid& grid,
                                   const std::function<double(Complex)>& f) {
    return TransferOperator(map).apply(grid, f);
}

/// sup over the grid of | L_{T_{s_0}} P_{x_omega} - P_{x_{sigma omega}} |,
/// with both fibres' fixed points computed by backward iteration.
double density_equivariance_residual(const CocyclePath& path, const CircleGrid& grid,
                                     const FixedPointOptions& opts = {});

/// Points (n, sup |P at backward orbit of pole - P at x_omega|) for
/// n = 0..n_max; h_* = 1 when h_star_pole is empty, else h_* = P at the pole.
std::vector<std::pair<int, double>> convergence_curve(const CocyclePath& path,
                                                      std::optional<DiscPoint> h_star_pole,
                                                      int n_max, const CircleGrid& grid,
                                                      const FixedPointOptions& opts = {});

}  // namespace blaschke
