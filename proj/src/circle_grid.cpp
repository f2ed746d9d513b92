#include "blaschke/circle_grid.hpp"

#include <cmath>

namespace blaschke {

CircleGrid::CircleGrid(int size) : size_(size) {
    if (size < 8) throw GridTooCoarse("CircleGrid: need at least 8 nodes");
    nodes_.reserve(static_cast<size_t>(size));
    for (int j = 0; j < size; ++j) {
        const double t = kTwoPi * j / size;
        nodes_.emplace_back(std::cos(t), std::sin(t));
    }
}

double quadrature(const CircleGrid& grid, std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(grid.size());
}

Complex quadrature(const CircleGrid& grid, std::span<const Complex> values) {
    Complex s(0.0, 0.0);
    for (const Complex& v : values) s += v;
    return s / static_cast<double>(grid.size());
}

GridFunction::GridFunction(CircleGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(grid_.size())) {
        throw std::invalid_argument("GridFunction: value count must match grid size");
    }
    if (grid_.size() % 2 != 0) {
        throw std::invalid_argument("GridFunction: grid size must be even for interpolation");
    }
}

double GridFunction::operator()(double t) const {
    const int n = grid_.size();
    t -= std::floor(t);
    // Berrut's barycentric formula for equispaced periodic nodes, even N:
    //   p(t) = sum_j (-1)^j f_j cot(pi (t - t_j)) / sum_j (-1)^j cot(pi (t - t_j))
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = t - static_cast<double>(j) / n;
        const double s = std::sin(kPi * d);
        if (std::abs(s) < 1e-14) return values_[static_cast<size_t>(j)];
        const double w = ((j & 1) ? -1.0 : 1.0) * std::cos(kPi * d) / s;
        num += w * values_[static_cast<size_t>(j)];
        den += w;
    }
    return num / den;
}

double GridFunction::integral() const { return quadrature(grid_, std::span<const double>(values_)); }

double GridFunction::max_abs_diff(const GridFunction& other) const {
    if (other.values_.size() != values_.size()) {
        throw std::invalid_argument("max_abs_diff: grids differ");
    }
    double m = 0.0;
    for (size_t j = 0; j < values_.size(); ++j) {
        m = std::max(m, std::abs(values_[j] - other.values_[j]));
    }
    return m;
}

}  // namespace blaschke
