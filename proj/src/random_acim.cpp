#include "blaschke/random_acim.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace blaschke {

namespace {

// Least-squares slope of log(d_n) over the last half of the positive diffs.
std::optional<double> fit_rate(const std::vector<double>& diffs) {
    std::vector<std::pair<double, double>> pts;
    const size_t lo = diffs.size() / 2;
    for (size_t i = lo; i < diffs.size(); ++i) {
        if (diffs[i] > 0.0) pts.emplace_back(static_cast<double>(i + 1), std::log(diffs[i]));
    }
    if (pts.size() < 3) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    const double denom = m * sxx - sx * sx;
    if (denom <= 0.0) return std::nullopt;
    return std::exp((m * sxy - sx * sy) / denom);
}

}  // namespace

RandomFixedPointResult random_fixed_point(const CocyclePath& path,
                                          const FixedPointOptions& opts) {
    RandomFixedPointResult res;
    res.iterates.push_back(opts.z0);
    std::vector<double> diffs;
    int boundary_streak = 0;
    const int max_n = std::min(opts.max_n, path.n_back());
    for (int n = 1; n <= max_n; ++n) {
        const Complex z = path.backward_compose(n, opts.z0);
        const double d = std::abs(z - res.iterates.back());
        res.iterates.push_back(z);
        diffs.push_back(d);
        res.n_used = n;
        if (std::abs(z) > 1.0 - opts.boundary_band) {
            if (++boundary_streak >= opts.boundary_run) {
                res.status = FixedPointStatus::BoundaryDivergence;
                res.fitted_rate = fit_rate(diffs);
                return res;
            }
        } else {
            boundary_streak = 0;
            if (d < opts.tol) {
                // A single small step can be a coincidence (e.g. the innermost
                // map fixes 0); accept only if a deeper composition agrees.
                const int probe_n = std::min(2 * n, path.n_back());
                const Complex probe = path.backward_compose(probe_n, opts.z0);
                if (std::abs(probe - z) < 100.0 * opts.tol) {
                    res.status = FixedPointStatus::Converged;
                    // The depth-2n composition is the sharper estimate of the
                    // common limit; report it as the fixed point.
                    res.x_omega = DiscPoint(probe);
                    res.fitted_rate = fit_rate(diffs);
                    return res;
                }
            }
        }
    }
    res.status = FixedPointStatus::MaxIterations;
    res.fitted_rate = fit_rate(diffs);
    return res;
}

GridFunction TransferOperator::apply(const CircleGrid& grid,
                                     const std::function<double(Complex)>& f) const {
    std::vector<double> out(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        double s = 0.0;
        for (const UnitComplex& w : preimages(lift_, UnitComplex(grid.node(j)))) {
            s += f(w.value()) / map_.deriv_modulus_on_circle(w);
        }
        out[static_cast<size_t>(j)] = s;
    }
    return GridFunction(grid, std::move(out));
}

GridFunction TransferOperator::apply(const GridFunction& f) const {
    return apply(f.grid(), [&f](Complex w) {
        double t = std::arg(w) / kTwoPi;
        if (t < 0.0) t += 1.0;
        return f(t);
    });
}

namespace {

DiscPoint require_converged(const CocyclePath& path, const FixedPointOptions& opts,
                            const char* who) {
    const RandomFixedPointResult r = random_fixed_point(path, opts);
    if (r.status != FixedPointStatus::Converged) {
        throw FixedPointNotConverged(std::string(who) + ": backward iteration did not converge");
    }
    return *r.x_omega;
}

}  // namespace

double density_equivariance_residual(const CocyclePath& path, const CircleGrid& grid,
                                     const FixedPointOptions& opts) {
    const DiscPoint x = require_converged(path, opts, "density_equivariance_residual");
    const DiscPoint x_next =
        require_converged(path.shifted(1), opts, "density_equivariance_residual (shifted)");
    const BlaschkeProduct map0 = path.effective_map_at(0);
    const GridFunction pushed =
        transfer_apply(map0, grid, [&x](Complex z) { return poisson_density(x, z); });
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double expect = poisson_density(x_next, grid.node(j));
        worst = std::max(worst, std::abs(pushed.value_at_node(j) - expect));
    }
    return worst;
}

std::vector<std::pair<int, double>> convergence_curve(const CocyclePath& path,
                                                      std::optional<DiscPoint> h_star_pole,
                                                      int n_max, const CircleGrid& grid,
                                                      const FixedPointOptions& opts) {
    const DiscPoint x = require_converged(path, opts, "convergence_curve");
    const Complex z0 = h_star_pole ? h_star_pole->value() : Complex(0.0, 0.0);
    std::vector<std::pair<int, double>> curve;
    curve.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= std::min(n_max, path.n_back()); ++n) {
        const Complex b = path.backward_compose(n, z0);
        double sup = 0.0;
        if (std::abs(b) < 1.0 - kBoundaryEps) {
            const DiscPoint pole{b};
            for (const Complex& z : grid.nodes()) {
                sup = std::max(sup, std::abs(poisson_density(pole, z) - poisson_density(x, z)));
            }
        } else {
            sup = std::numeric_limits<double>::infinity();
        }
        curve.emplace_back(n, sup);
    }
    return curve;
}

}  // namespace blaschke
