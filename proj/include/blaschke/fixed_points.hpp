#pragma once

// Fixed points of a Blaschke product: clear denominators of T(z) = z to a
// polynomial, extract roots via the companion matrix, Newton-polish, and
// classify into the three mutually exclusive cases.

#include <optional>
#include <vector>

#include "blaschke/blaschke_product.hpp"

namespace blaschke {

enum class FixedPointCase { AllOnCircle, AttractorInDisc, IndifferentOnCircle };

struct CircleFixedPoint {
    UnitComplex point;
    double multiplier_modulus;  // |T'| at the fixed point
};

struct FixedPointClassification {
    FixedPointCase kind;
    std::vector<CircleFixedPoint> circle_fixed_points;
    std::optional<DiscPoint> disc_fixed_point;
    std::optional<double> disc_multiplier_modulus;
};

/// All finite solutions of T(z) = z, polished; residuals below tol_root.
/// A fixed point at infinity (paired with an attractor at the origin) shows
/// up as a degree deficit, not as an entry here.
std::vector<Complex> fixed_points_all(const BlaschkeProduct& map, double tol_root = kRootTol);

/// Bucket the fixed points by |z| and multiplier modulus. Throws Degenerate
/// if the counts match none of the cases (possible for degree 1, which has
/// no classification contract).
FixedPointClassification classify_fixed_points(const BlaschkeProduct& map,
                                               double tol_indiff = 1e-8);

}  // namespace blaschke
