#include "blaschke/admissibility.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "blaschke/lift.hpp"

namespace blaschke {

namespace {

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters = 80) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && b - a > 1e-15; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

}  // namespace

double inf_deriv(const BlaschkeProduct& map, int grid) {
    const auto slope = [&map](double t) {
        return map.deriv_modulus_on_circle(UnitComplex::from_turns(t));
    };
    double best = slope(0.0);
    int argmin = 0;
    for (int j = 1; j < grid; ++j) {
        const double v = slope(static_cast<double>(j) / grid);
        if (v < best) {
            best = v;
            argmin = j;
        }
    }
    const double lo = static_cast<double>(argmin - 1) / grid;
    const double hi = static_cast<double>(argmin + 1) / grid;
    return std::min(best, golden_min(slope, lo, hi));
}

double martin_bound(const BlaschkeProduct& map) {
    double s = 0.0;
    for (const DiscPoint& a : map.zeros()) {
        s += (1.0 - a.abs()) / (1.0 + a.abs());
    }
    return s;
}

double variation_one_over_deriv(const BlaschkeProduct& map, const CircleGrid& grid) {
    return quadrature(grid, [&map](Complex z) {
        const Complex d1 = map.derivative(z);
        return std::abs(map.second_derivative(z) / (d1 * d1));
    });
}

AdmissibilityReport check_admissible(const MapTable& table, const DrivingSystem& driving,
                                     int inf_grid, int quad_grid) {
    AdmissibilityReport report;
    const CircleGrid grid(quad_grid);
    const std::vector<double> p = driving.symbol_probabilities();
    if (static_cast<int>(p.size()) > table.size()) {
        throw std::invalid_argument("check_admissible: table smaller than alphabet");
    }
    for (int j = 0; j < static_cast<int>(p.size()); ++j) {
        const BlaschkeProduct& map = table.map(j);
        MapAdmissibilityStats stats;
        stats.degree = map.degree();
        stats.inf_deriv = inf_deriv(map, inf_grid);
        stats.martin_bound = martin_bound(map);
        stats.variation = variation_one_over_deriv(map, grid);
        report.per_map.push_back(stats);
        report.e_log_inf_deriv += p[static_cast<size_t>(j)] * std::log(stats.inf_deriv);
        report.e_deg_over_inf += p[static_cast<size_t>(j)] * stats.degree / stats.inf_deriv;
        report.e_variation_log_plus +=
            p[static_cast<size_t>(j)] * std::max(0.0, std::log(stats.variation));
    }
    if (report.per_map.size() == 2) {
        const double la = std::log(report.per_map[0].inf_deriv);
        const double lb = std::log(report.per_map[1].inf_deriv);
        if (la != lb) report.threshold_p = lb / (lb - la);
    }
    const bool finite = std::isfinite(report.e_deg_over_inf) &&
                        std::isfinite(report.e_variation_log_plus) &&
                        std::isfinite(report.e_log_inf_deriv);
    if (!finite) {
        report.verdict = AdmissibilityVerdict::Inconclusive;
    } else if (report.e_log_inf_deriv > 0.0) {
        report.verdict = AdmissibilityVerdict::AdmissibleEvidence;
    } else {
        report.verdict = AdmissibilityVerdict::FailsCondition;
        report.failed_condition = 2;
    }
    return report;
}

CoveringResult covering_time(const CocyclePath& path, double t_a, double t_b, int max_n) {
    if (!(0.0 <= t_a && t_a < t_b && t_b <= 1.0) || (t_b - t_a >= 1.0)) {
        throw std::invalid_argument("covering_time: need 0 <= t_a < t_b <= 1 with m(arc) < 1");
    }
    max_n = std::min(max_n, path.n_back());
    // Lifts per distinct (symbol, theta) pair; compositions reuse them.
    std::vector<std::optional<CircleLift>> lifts(static_cast<size_t>(path.table().size()));
    const auto lift_for = [&](int symbol) -> const CircleLift& {
        auto& slot = lifts[static_cast<size_t>(symbol)];
        if (!slot) slot.emplace(path.table().map(symbol).rotated(path.theta()));
        return *slot;
    };
    double log_inf_sum = 0.0;
    std::vector<double> log_inf_by_symbol(static_cast<size_t>(path.table().size()),
                                          std::numeric_limits<double>::quiet_NaN());
    for (int n = 1; n <= max_n; ++n) {
        {
            const int s = path.symbol(-n);
            auto& li = log_inf_by_symbol[static_cast<size_t>(s)];
            if (!std::isfinite(li)) li = std::log(inf_deriv(path.table().map(s)));
            log_inf_sum += li;
        }
        // Image of the arc under T_{s_{-n}}, then s_{-n+1}, ..., then s_{-1}.
        double lo = t_a, len = t_b - t_a;
        bool full = false;
        for (int k = n; k >= 1 && !full; --k) {
            const CircleLift& lift = lift_for(path.symbol(-k));
            const double a = lift(lo);
            const double b = lift(lo + len);
            if (b - a >= 1.0) {
                full = true;
            } else {
                lo = a - std::floor(a);
                len = b - a;
            }
        }
        if (full) {
            CoveringResult res;
            res.n_cover = n;
            res.lambda_hat = log_inf_sum / n;
            if (res.lambda_hat > 0.0) {
                res.bound_estimate =
                    static_cast<int>(std::ceil(-(2.0 / res.lambda_hat) * std::log(t_b - t_a)));
            }
            return res;
        }
    }
    throw NotCovered(max_n);
}

double origin_minimal_zero_magnitude(double c, int j) {
    const double m = static_cast<double>(j + 1) * (j + 1) - 1.0;  // degree - 1
    if (!(c > 0.0) || m < c) {
        throw HypothesisViolated("origin example: need 0 < c <= (j+1)^2 - 1");
    }
    return (m - c) / (m + c);
}

BlaschkeProduct make_origin_example_map(double c, int j, double zero_magnitude, UnitComplex rho) {
    const double minimal = origin_minimal_zero_magnitude(c, j);
    if (zero_magnitude < minimal - 1e-15 || zero_magnitude >= 1.0 - kBoundaryEps) {
        throw HypothesisViolated("origin example: zero magnitude must lie in [minimal, 1)");
    }
    const int degree = (j + 1) * (j + 1);
    std::vector<DiscPoint> zeros;
    zeros.reserve(static_cast<size_t>(degree));
    zeros.emplace_back(Complex(0.0, 0.0));
    for (int i = 1; i < degree; ++i) zeros.emplace_back(Complex(zero_magnitude, 0.0));
    return BlaschkeProduct(rho, std::move(zeros));
}

OriginExampleReport origin_example_checks(double c, int j, double zero_magnitude,
                                          UnitComplex rho, int grid) {
    const BlaschkeProduct map = make_origin_example_map(c, j, zero_magnitude, rho);
    OriginExampleReport report;
    report.j = j;
    report.degree = map.degree();
    report.c = c;
    report.zero_magnitude = zero_magnitude;
    report.inf_deriv = inf_deriv(map, grid);
    report.inf_within_bound = report.inf_deriv <= c + 1.0 + 1e-9;
    report.expanding = report.inf_deriv > 1.0;

    // A zero at the origin forces T(0) = 0, so backward iteration lands at 0
    // immediately for any composition over a table of such maps.
    const MapTable table({map});
    const CocyclePath path(DrivingSystem::bernoulli({1.0}), table, 1, 64, 0);
    const RandomFixedPointResult fp = random_fixed_point(path);
    report.fixed_point_abs =
        fp.status == FixedPointStatus::Converged ? fp.x_omega->abs()
                                                 : std::numeric_limits<double>::infinity();

    const CircleGrid qgrid(4096);
    const double lebesgue = lebesgue_log_deriv(map, qgrid);
    const DiscPoint x(fp.status == FixedPointStatus::Converged ? fp.x_omega->value()
                                                               : Complex(0.0, 0.0));
    const double weighted = quadrature(qgrid, [&](Complex z) {
        return std::log(map.deriv_modulus_on_circle(UnitComplex(z))) * poisson_density(x, z);
    });
    report.entropy_vs_lebesgue = std::abs(weighted - lebesgue);
    return report;
}

double origin_series_partial_sum(int j_max, double c) {
    double s = 0.0;
    for (int j = 1; j <= j_max; ++j) {
        const double jp = static_cast<double>(j + 1);
        s += jp * jp / (static_cast<double>(j) * j);
    }
    return 6.0 / (kPi * kPi * (c + 1.0)) * s;
}

}  // namespace blaschke
