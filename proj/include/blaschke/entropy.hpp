#pragma once

// Entropy and Lyapunov estimators: base entropy of the driving, per-map
// Lebesgue averages of log |T'|, two fibre-entropy estimators (orbit
// Birkhoff average and density-weighted quadrature over fibres), the
// theta sweep, and the theta-averaging identity residual.

#include <cstdint>
#include <functional>
#include <optional>

#include "blaschke/random_acim.hpp"

namespace blaschke {

/// -sum p log p for a Bernoulli shift (natural log), 0 for a rotation.
double base_entropy(const DrivingSystem& driving);

/// Quadrature of log |T'| over the circle.
double lebesgue_log_deriv(const BlaschkeProduct& map, const CircleGrid& grid);

struct OrbitEstimate {
    double value = 0.0;
    double std_error = 0.0;  // batch-means standard error
    int n_steps = 0;
};

/// Birkhoff average of log |T'_{s_k}(z_k)| along z_{k+1} = theta T_{s_k}(z_k),
/// after a discarded burn-in. |(theta T)'| = |T'|, so theta enters only
/// through the orbit.
OrbitEstimate fibre_entropy_orbit(const CocyclePath& path, int n_steps,
                                  UnitComplex z0 = UnitComplex(Complex(1.0, 0.0)),
                                  int burn_in = 1000, int n_batches = 20);

struct QuadratureEstimate {
    double value = 0.0;
    double std_error = 0.0;  // between-fibre standard error
    int fibres_used = 0;
    int fibres_diverged = 0;
    std::vector<double> per_fibre;  // int log|T'_{s_k}| P_{x_k} dm per fibre
};

/// Average over base-shifted fibres of  int log |T'_omega| P_{x_omega} dm,
/// skipping (and counting) fibres whose backward iteration diverges.
QuadratureEstimate fibre_entropy_quadrature(const CocyclePath& path, int n_fibres,
                                            const CircleGrid& grid,
                                            const FixedPointOptions& opts = {});

struct ThetaSweepPoint {
    double t = 0.0;  // theta = e^{2 pi i t}
    double h_fib = 0.0;
    double std_error = 0.0;
    bool ok = false;
};

struct ThetaSweepResult {
    std::vector<ThetaSweepPoint> points;
    double mean = 0.0;  // over successful points
    int failures = 0;
};

/// Orbit-estimator fibre entropy of (theta T_omega) over a grid of t values.
/// Each point gets an independent path seeded by mix_seed(master_seed, index);
/// points are distributed over threads, results are order-deterministic.
ThetaSweepResult theta_sweep(const DrivingSystem& driving, const MapTable& table,
                             std::span<const double> t_grid, int n_steps,
                             std::uint64_t master_seed, int burn_in = 1000, int n_threads = 0);

/// Uniform t-grid of the given size in [0, 1).
std::vector<double> uniform_t_grid(int n_points);

/// sum_j P(symbol j) int log |T'_j| dm  +  base entropy.
double average_entropy_analytic(const MapTable& table, const DrivingSystem& driving,
                                const CircleGrid& grid);

/// | theta-average of int f(T^(n) at theta, backward-labelled) dm - int f dm |
/// for one realized path; the theta average runs over n_theta uniform points.
double lebesgue_theta_average_residual(const MapTable& table, const DrivingSystem& driving,
                                       const std::function<double(Complex)>& f, int n_compose,
                                       int n_theta, const CircleGrid& grid, std::uint64_t seed);

}  // namespace blaschke
