#pragma once

// A realized two-sided window of the driving system with its symbol-to-map
// assignment and the rotation parameter theta: the effective map at index j
// is theta * T_{s_j}. Paths are immutable and bit-reproducible from
// (driving, table, seed, window).

#include <cstdint>
#include <memory>

#include "blaschke/driving.hpp"

namespace blaschke {

class CocyclePath {
  public:
    CocyclePath(DrivingSystem driving, MapTable table, std::uint64_t seed, int n_back,
                int n_fwd, UnitComplex theta = UnitComplex(Complex(1.0, 0.0)));

    int n_back() const { return origin_; }
    int n_fwd() const { return static_cast<int>(symbols_->size()) - origin_ - 1; }

    /// Realized symbol s_j for j in [-n_back, n_fwd].
    int symbol(int j) const;
    const BlaschkeProduct& map_at(int j) const { return table_->map(symbol(j)); }
    BlaschkeProduct effective_map_at(int j) const { return map_at(j).rotated(theta_); }

    const UnitComplex& theta() const { return theta_; }
    const MapTable& table() const { return *table_; }
    const DrivingSystem& driving() const { return *driving_; }
    std::uint64_t seed() const { return seed_; }

    /// Same realization with the index origin moved to +offset (the window
    /// shrinks accordingly); realizes the shifted fibre sigma^offset(omega).
    CocyclePath shifted(int offset) const;

    /// theta T_{s_{j+n-1}} o ... o theta T_{s_j} applied to z.
    Complex forward_compose(int j, int n, Complex z) const;

    /// theta T_{s_{-1}} o ... o theta T_{s_{-n}} applied to z.
    Complex backward_compose(int n, Complex z) const;
    Complex backward_compose_at_zero(int n) const { return backward_compose(n, Complex(0.0, 0.0)); }

  private:
    CocyclePath() = default;

    std::shared_ptr<const DrivingSystem> driving_;
    std::shared_ptr<const MapTable> table_;
    std::shared_ptr<const std::vector<int>> symbols_;
    int origin_ = 0;  // index of s_0 within symbols_
    UnitComplex theta_;
    std::uint64_t seed_ = 0;
};

inline CocyclePath sample_path(const DrivingSystem& driving, const MapTable& table,
                               std::uint64_t seed, int n_back, int n_fwd,
                               UnitComplex theta = UnitComplex(Complex(1.0, 0.0))) {
    return CocyclePath(driving, table, seed, n_back, n_fwd, theta);
}

/// max over the table of sup_{|z| = R} |T(z)| on an angular grid; the cocycle
/// is uniformly contracting on D_R exactly when this is < R.
double uniform_contraction_radius(const MapTable& table, double R, int grid = 4096);

}  // namespace blaschke
