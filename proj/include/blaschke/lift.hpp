#pragma once

// Monotone lift S of a Blaschke product in circle coordinates, branch
// inversion (preimages on the circle), and arc-image arithmetic.

#include <vector>

#include "blaschke/blaschke_product.hpp"

namespace blaschke {

/// Continuous lift S with T(e^{2 pi i t}) = e^{2 pi i S(t)}, S(0) in [0, 1)
/// and S(t + 1) = S(t) + degree. Built by argument tracking on a grid fine
/// enough that consecutive image arguments differ by less than half a turn;
/// point queries are then exact (anchor value plus a principal argument).
class CircleLift {
  public:
    explicit CircleLift(BlaschkeProduct map, int initial_grid = 1024);

    double operator()(double t) const;
    /// S'(t) = |T'(e^{2 pi i t})|.
    double slope(double t) const;

    const BlaschkeProduct& map() const { return map_; }
    int degree() const { return map_.degree(); }
    int grid_size() const { return grid_size_; }

  private:
    BlaschkeProduct map_;
    int grid_size_ = 0;
    std::vector<double> anchors_;  // lifted values at j/N, j = 0..N

    bool build(int n_grid);
};

/// All degree-many solutions w on the circle of T(w) = z, by bisection on the
/// monotone lift branches followed by one Newton step. Throws BranchMiss if
/// any root fails the residual check |T(w) - z| < tol_root.
std::vector<UnitComplex> preimages(const CircleLift& lift, const UnitComplex& z,
                                   double tol_root = kRootTol);
std::vector<UnitComplex> preimages(const BlaschkeProduct& map, const UnitComplex& z,
                                   double tol_root = kRootTol);

/// Normalized Lebesgue measure of the image set T([t_a, t_b]) on the circle:
/// min(1, S(t_b) - S(t_a)). Requires t_a < t_b <= t_a + 1.
double arc_image_measure(const CircleLift& lift, double t_a, double t_b);
double arc_image_measure(const BlaschkeProduct& map, double t_a, double t_b);

}  // namespace blaschke
