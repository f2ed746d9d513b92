#include "blaschke/poisson.hpp"

#include <cmath>

namespace blaschke {

double poisson_density(const DiscPoint& x, Complex z_on_circle) {
    return (1.0 - std::norm(x.value())) / std::norm(z_on_circle - x.value());
}

double poisson_supnorm_diff_bound(const DiscPoint& x, const DiscPoint& y) {
    const double dx = 1.0 - x.abs();
    const double dy = 1.0 - y.abs();
    return 12.0 * std::abs(x.value() - y.value()) / (dx * dx * dy * dy);
}

Complex harmonic_extension(const CircleGrid& grid, std::span<const Complex> f_values,
                           const DiscPoint& x) {
    if (f_values.size() != static_cast<size_t>(grid.size())) {
        throw std::invalid_argument("harmonic_extension: sample count must match grid");
    }
    Complex s(0.0, 0.0);
    for (int j = 0; j < grid.size(); ++j) {
        s += f_values[static_cast<size_t>(j)] * poisson_density(x, grid.node(j));
    }
    return s / static_cast<double>(grid.size());
}

double pushforward_identity_residual(const BlaschkeProduct& map, const DiscPoint& x,
                                     int k_max, const CircleGrid& grid) {
    const int n = grid.size();
    std::vector<Complex> tz(static_cast<size_t>(n));
    std::vector<double> px(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        tz[static_cast<size_t>(j)] = map.eval(grid.node(j));
        px[static_cast<size_t>(j)] = poisson_density(x, grid.node(j));
    }
    const Complex tx = map.eval(x.value());
    double worst = 0.0;
    std::vector<Complex> pow_k(static_cast<size_t>(n), Complex(1.0, 0.0));
    Complex tx_k(1.0, 0.0);
    for (int k = 0; k <= k_max; ++k) {
        Complex lhs(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            lhs += pow_k[static_cast<size_t>(j)] * px[static_cast<size_t>(j)];
        }
        lhs /= static_cast<double>(n);
        worst = std::max(worst, std::abs(lhs - tx_k));
        for (int j = 0; j < n; ++j) pow_k[static_cast<size_t>(j)] *= tz[static_cast<size_t>(j)];
        tx_k *= tx;
    }
    return worst;
}

Complex mobius_to(const DiscPoint& x, Complex z) {
    return (z + x.value()) / (1.0 + std::conj(x.value()) * z);
}

double mobius_transport_residual(const DiscPoint& x, const CircleGrid& grid, int k_max) {
    const int n = grid.size();
    double worst = 0.0;
    std::vector<Complex> zk(static_cast<size_t>(n), Complex(1.0, 0.0));
    std::vector<Complex> phik(static_cast<size_t>(n), Complex(1.0, 0.0));
    std::vector<double> px(static_cast<size_t>(n));
    std::vector<Complex> phi(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        px[static_cast<size_t>(j)] = poisson_density(x, grid.node(j));
        phi[static_cast<size_t>(j)] = mobius_to(x, grid.node(j));
    }
    for (int k = 1; k <= k_max; ++k) {
        Complex lhs(0.0, 0.0), rhs(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            zk[static_cast<size_t>(j)] *= grid.node(j);
            phik[static_cast<size_t>(j)] *= phi[static_cast<size_t>(j)];
            lhs += zk[static_cast<size_t>(j)] * px[static_cast<size_t>(j)];
            rhs += phik[static_cast<size_t>(j)];
        }
        worst = std::max(worst, std::abs(lhs - rhs) / static_cast<double>(n));
    }
    return worst;
}

}  // namespace blaschke
