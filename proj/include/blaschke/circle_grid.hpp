#pragma once

// Uniform grid on the circle with normalized Lebesgue quadrature, and real
// grid functions with trigonometric (barycentric) off-node evaluation.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "blaschke/blaschke_product.hpp"
#include "blaschke/errors.hpp"

namespace blaschke {

class CircleGrid {
  public:
    /// Nodes t_j = j/N, z_j = e^{2 pi i t_j}; weight 1/N each (m(T) = 1).
    explicit CircleGrid(int size);

    int size() const { return size_; }
    double t(int j) const { return static_cast<double>(j) / size_; }
    Complex node(int j) const { return nodes_[static_cast<size_t>(j)]; }
    const std::vector<Complex>& nodes() const { return nodes_; }

  private:
    int size_;
    std::vector<Complex> nodes_;
};

double quadrature(const CircleGrid& grid, std::span<const double> values);
Complex quadrature(const CircleGrid& grid, std::span<const Complex> values);

/// Mean of f over the nodes; spectrally accurate for smooth periodic f.
template <typename F>
auto quadrature(const CircleGrid& grid, F&& f) {
    using R = decltype(f(Complex{}));
    R s{};
    for (const Complex& z : grid.nodes()) s += f(z);
    return s / static_cast<double>(grid.size());
}

/// Real-valued samples on a CircleGrid, evaluable between nodes by the
/// barycentric trigonometric interpolation formula (grid size must be even).
class GridFunction {
  public:
    GridFunction(CircleGrid grid, std::vector<double> values);

    template <typename F>
    static GridFunction sample(const CircleGrid& grid, F&& f) {
        std::vector<double> v;
        v.reserve(static_cast<size_t>(grid.size()));
        for (const Complex& z : grid.nodes()) v.push_back(f(z));
        return GridFunction(grid, std::move(v));
    }

    const CircleGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double value_at_node(int j) const { return values_[static_cast<size_t>(j)]; }

    /// Interpolated value at circle coordinate t (any real, period 1).
    double operator()(double t) const;

    double integral() const;
    double max_abs_diff(const GridFunction& other) const;

  private:
    CircleGrid grid_;
    std::vector<double> values_;
};

}  // namespace blaschke
