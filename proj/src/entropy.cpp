#include "blaschke/entropy.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace blaschke {

double base_entropy(const DrivingSystem& driving) {
    if (driving.kind() == DrivingKind::IrrationalRotation) return 0.0;
    double h = 0.0;
    for (double p : driving.probabilities()) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

double lebesgue_log_deriv(const BlaschkeProduct& map, const CircleGrid& grid) {
    return quadrature(grid, [&map](Complex z) {
        return std::log(map.deriv_modulus_on_circle(UnitComplex(z)));
    });
}

OrbitEstimate fibre_entropy_orbit(const CocyclePath& path, int n_steps, UnitComplex z0,
                                  int burn_in, int n_batches) {
    if (n_steps < 100) throw std::invalid_argument("fibre_entropy_orbit: need n_steps >= 100");
    if (path.n_fwd() < burn_in + n_steps) {
        throw std::invalid_argument("fibre_entropy_orbit: path window shorter than the orbit");
    }
    const Complex th = path.theta().value();
    UnitComplex z = z0;
    for (int k = 0; k < burn_in; ++k) {
        z = UnitComplex(th * path.map_at(k).eval(z.value()));
    }
    std::vector<double> samples(static_cast<size_t>(n_steps));
    for (int k = 0; k < n_steps; ++k) {
        const BlaschkeProduct& map = path.map_at(burn_in + k);
        samples[static_cast<size_t>(k)] = std::log(map.deriv_modulus_on_circle(z));
        z = UnitComplex(th * map.eval(z.value()));
    }
    OrbitEstimate est;
    est.n_steps = n_steps;
    double sum = 0.0;
    for (double v : samples) sum += v;
    est.value = sum / n_steps;
    // Batch means absorb the orbit's short-range correlation.
    n_batches = std::min(n_batches, n_steps);
    const int bsize = n_steps / n_batches;
    double var = 0.0;
    for (int b = 0; b < n_batches; ++b) {
        double bsum = 0.0;
        for (int k = b * bsize; k < (b + 1) * bsize; ++k) bsum += samples[static_cast<size_t>(k)];
        const double bm = bsum / bsize - est.value;
        var += bm * bm;
    }
    var /= std::max(1, n_batches - 1);
    est.std_error = std::sqrt(var / n_batches);
    return est;
}

QuadratureEstimate fibre_entropy_quadrature(const CocyclePath& path, int n_fibres,
                                            const CircleGrid& grid,
                                            const FixedPointOptions& opts) {
    QuadratureEstimate est;
    for (int k = 0; k < n_fibres; ++k) {
        const CocyclePath fibre = path.shifted(k);
        const RandomFixedPointResult fp = random_fixed_point(fibre, opts);
        if (fp.status != FixedPointStatus::Converged) {
            ++est.fibres_diverged;
            continue;
        }
        const DiscPoint& x = *fp.x_omega;
        const BlaschkeProduct& map = fibre.map_at(0);
        const double v = quadrature(grid, [&](Complex z) {
            return std::log(map.deriv_modulus_on_circle(UnitComplex(z))) * poisson_density(x, z);
        });
        est.per_fibre.push_back(v);
    }
    est.fibres_used = static_cast<int>(est.per_fibre.size());
    if (est.fibres_used == 0) return est;
    double sum = 0.0;
    for (double v : est.per_fibre) sum += v;
    est.value = sum / est.fibres_used;
    double var = 0.0;
    for (double v : est.per_fibre) var += (v - est.value) * (v - est.value);
    var /= std::max(1, est.fibres_used - 1);
    est.std_error = std::sqrt(var / est.fibres_used);
    return est;
}

std::vector<double> uniform_t_grid(int n_points) {
    std::vector<double> t(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i) t[static_cast<size_t>(i)] = static_cast<double>(i) / n_points;
    return t;
}

ThetaSweepResult theta_sweep(const DrivingSystem& driving, const MapTable& table,
                             std::span<const double> t_grid, int n_steps,
                             std::uint64_t master_seed, int burn_in, int n_threads) {
    if (t_grid.empty()) throw std::invalid_argument("theta_sweep: empty t grid");
    ThetaSweepResult result;
    result.points.resize(t_grid.size());
    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads <= 0) n_threads = 1;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < t_grid.size(); i = next.fetch_add(1)) {
            ThetaSweepPoint& pt = result.points[i];
            pt.t = t_grid[i];
            try {
                const CocyclePath path(driving, table, mix_seed(master_seed, i), 0,
                                       burn_in + n_steps, UnitComplex::from_turns(t_grid[i]));
                const OrbitEstimate est = fibre_entropy_orbit(path, n_steps,
                                                              UnitComplex(Complex(1.0, 0.0)),
                                                              burn_in);
                pt.h_fib = est.value;
                pt.std_error = est.std_error;
                pt.ok = true;
            } catch (const std::exception&) {
                pt.ok = false;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    double sum = 0.0;
    int ok = 0;
    for (const ThetaSweepPoint& pt : result.points) {
        if (pt.ok) {
            sum += pt.h_fib;
            ++ok;
        } else {
            ++result.failures;
        }
    }
    result.mean = ok > 0 ? sum / ok : 0.0;
    return result;
}

double average_entropy_analytic(const MapTable& table, const DrivingSystem& driving,
                                const CircleGrid& grid) {
    const std::vector<double> p = driving.symbol_probabilities();
    if (static_cast<int>(p.size()) > table.size()) {
        throw std::invalid_argument("average_entropy_analytic: table smaller than alphabet");
    }
    double fibre = 0.0;
    for (size_t j = 0; j < p.size(); ++j) {
        fibre += p[j] * lebesgue_log_deriv(table.map(static_cast<int>(j)), grid);
    }
    return fibre + base_entropy(driving);
}

double lebesgue_theta_average_residual(const MapTable& table, const DrivingSystem& driving,
                                       const std::function<double(Complex)>& f, int n_compose,
                                       int n_theta, const CircleGrid& grid, std::uint64_t seed) {
    const CocyclePath path(driving, table, seed, n_compose, 0);
    const double f_mean = quadrature(grid, f);
    double avg = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const Complex th = UnitComplex::from_turns(static_cast<double>(i) / n_theta).value();
        double inner = 0.0;
        for (const Complex& z : grid.nodes()) {
            Complex w = z;
            for (int k = n_compose; k >= 1; --k) {
                w = th * path.map_at(-k).eval(w);
            }
            inner += f(w);
        }
        avg += inner / grid.size();
    }
    avg /= n_theta;
    return std::abs(avg - f_mean);
}

}  // namespace blaschke
