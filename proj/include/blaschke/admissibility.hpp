#pragma once

// Numerical evidence for the admissibility conditions of a Blaschke product
// cocycle: per-map expansion infima with their Martin lower bounds,
// distortion variation, exact finite-alphabet expectations, covering times,
// and the inadmissible origin-fixing family.

#include <optional>

#include "blaschke/cocycle_path.hpp"
#include "blaschke/entropy.hpp"

namespace blaschke {

/// Grid minimum of |T'| on the circle, refined by golden-section search
/// around the grid argmin.
double inf_deriv(const BlaschkeProduct& map, int grid = 8192);

/// A = sum (1 - |a_i|)/(1 + |a_i|); always a lower bound for inf |T'|.
double martin_bound(const BlaschkeProduct& map);

/// Quadrature of |T''/(T')^2| over the circle (distortion variation).
double variation_one_over_deriv(const BlaschkeProduct& map, const CircleGrid& grid);

struct MapAdmissibilityStats {
    int degree = 0;
    double inf_deriv = 0.0;
    double martin_bound = 0.0;
    double variation = 0.0;
};

enum class AdmissibilityVerdict { AdmissibleEvidence, FailsCondition, Inconclusive };

struct AdmissibilityReport {
    std::vector<MapAdmissibilityStats> per_map;
    double e_log_inf_deriv = 0.0;       // must be > 0
    double e_deg_over_inf = 0.0;        // must be finite
    double e_variation_log_plus = 0.0;  // must be finite
    AdmissibilityVerdict verdict = AdmissibilityVerdict::Inconclusive;
    int failed_condition = 0;  // set when verdict == FailsCondition
    /// For two-map tables: the symbol-0 probability at which the expansion
    /// expectation crosses zero.
    std::optional<double> threshold_p;
};

/// Exact weighted sums over the finite alphabet; never Monte Carlo.
AdmissibilityReport check_admissible(const MapTable& table, const DrivingSystem& driving,
                                     int inf_grid = 8192, int quad_grid = 4096);

struct CoveringResult {
    int n_cover = 0;        // first n with full image measure
    double lambda_hat = 0.0;  // empirical mean of log inf |T'| along the path
    std::optional<int> bound_estimate;  // ceil(-(2/lambda) log m(A)) when lambda > 0
};

/// Smallest n with m(T^(n) backward-labelled image of [t_a, t_b]) = 1.
/// Throws NotCovered(max_n) if the cap is reached first.
CoveringResult covering_time(const CocyclePath& path, double t_a, double t_b, int max_n = 10000);

/// Minimal zero magnitude for which the constructed map of degree (j+1)^2
/// satisfies inf |T'| <= c + 1:  (n - 1 - c)/(n - 1 + c) with n = (j+1)^2.
double origin_minimal_zero_magnitude(double c, int j);

/// Degree-(j+1)^2 product fixing the origin: one zero at 0, the rest real at
/// +zero_magnitude. Throws HypothesisViolated if the preconditions fail.
BlaschkeProduct make_origin_example_map(double c, int j, double zero_magnitude,
                                        UnitComplex rho = UnitComplex(Complex(1.0, 0.0)));

struct OriginExampleReport {
    int j = 0;
    int degree = 0;
    double c = 0.0;
    double zero_magnitude = 0.0;
    double inf_deriv = 0.0;
    bool inf_within_bound = false;  // inf |T'| <= c + 1
    bool expanding = false;         // inf |T'| > 1
    double fixed_point_abs = 0.0;   // |x| from backward iteration (exactly 0)
    double entropy_vs_lebesgue = 0.0;  // |int log|T'| P_x dm - int log|T'| dm|
};

OriginExampleReport origin_example_checks(double c, int j, double zero_magnitude,
                                          UnitComplex rho = UnitComplex(Complex(1.0, 0.0)),
                                          int grid = 8192);

/// Partial sums s_J = 6/(pi^2 (c+1)) sum_{j<=J} (j+1)^2/j^2 of the divergent
/// degree-over-expansion integral lower bound.
double origin_series_partial_sum(int j_max, double c);

}  // namespace blaschke
