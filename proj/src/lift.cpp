#include "blaschke/lift.hpp"

#include <algorithm>
#include <cmath>

namespace blaschke {

namespace {

constexpr int kMaxLiftGrid = 1 << 22;
constexpr double kMaxStepTurns = 0.45;

inline Complex circle_point(double t) {
    return Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
}

/// Argument difference arg(b/a) in turns, principal value in (-1/2, 1/2].
inline double arg_diff_turns(Complex a, Complex b) {
    return std::arg(b * std::conj(a)) / kTwoPi;
}

inline int next_pow2_at_least(double x, int lo) {
    int n = lo;
    while (n < x && n < kMaxLiftGrid) n *= 2;
    return n;
}

}  // namespace

CircleLift::CircleLift(BlaschkeProduct map, int initial_grid) : map_(std::move(map)) {
    // Step size must keep image increments below half a turn; sup |T'| bounds
    // the increment per node spacing, so start from that estimate.
    const double needed = map_.sup_deriv_bound() / kMaxStepTurns;
    int n = next_pow2_at_least(std::max(needed, static_cast<double>(initial_grid)), 64);
    for (; n <= kMaxLiftGrid; n *= 2) {
        if (build(n)) return;
    }
    throw WindingMismatch("CircleLift: winding does not match degree at maximum grid size");
}

bool CircleLift::build(int n_grid) {
    const int deg = map_.degree();
    std::vector<double> acc(static_cast<size_t>(n_grid) + 1);
    Complex prev = map_.eval(Complex(1.0, 0.0));
    double s0 = std::arg(prev) / kTwoPi;
    if (s0 < 0.0) s0 += 1.0;
    acc[0] = s0;
    for (int j = 1; j <= n_grid; ++j) {
        const Complex cur = map_.eval(circle_point(static_cast<double>(j) / n_grid));
        const double step = arg_diff_turns(prev, cur);
        if (step < -1e-12 || step > kMaxStepTurns) return false;
        acc[static_cast<size_t>(j)] = acc[static_cast<size_t>(j - 1)] + std::max(step, 0.0);
        prev = cur;
    }
    const double winding = acc[static_cast<size_t>(n_grid)] - acc[0];
    if (std::abs(winding - deg) > 1e-6) return false;
    acc[static_cast<size_t>(n_grid)] = acc[0] + deg;  // snap, guards periodic drift
    grid_size_ = n_grid;
    anchors_ = std::move(acc);
    return true;
}

double CircleLift::operator()(double t) const {
    const double k = std::floor(t);
    const double tb = t - k;
    const int n = grid_size_;
    int j = static_cast<int>(tb * n);
    j = std::clamp(j, 0, n - 1);
    const double tj = static_cast<double>(j) / n;
    const Complex wj = circle_point(anchors_[static_cast<size_t>(j)]);
    const Complex wt = map_.eval(circle_point(tb));
    double v = anchors_[static_cast<size_t>(j)] + arg_diff_turns(wj, wt);
    return v + k * map_.degree();
}

double CircleLift::slope(double t) const {
    return map_.deriv_modulus_on_circle(UnitComplex::from_turns(t));
}

std::vector<UnitComplex> preimages(const CircleLift& lift, const UnitComplex& z,
                                   double tol_root) {
    const int deg = lift.degree();
    const double s0 = lift(0.0);
    const double tau = z.turns();
    std::vector<UnitComplex> roots;
    roots.reserve(static_cast<size_t>(deg));
    const double k0 = std::ceil(s0 - tau - 1e-15);
    for (int b = 0; b < deg; ++b) {
        const double target = tau + k0 + b;
        double lo = 0.0, hi = 1.0;
        if (target < s0) {
            // Root sits at t = 0 up to rounding.
            lo = hi = 0.0;
        } else {
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (lift(mid) < target ? lo : hi) = mid;
            }
        }
        double t = 0.5 * (lo + hi);
        // One Newton polish on the lift; the slope is analytic.
        const double sl = lift.slope(t);
        if (sl > 0.0) {
            const double tn = t - (lift(t) - target) / sl;
            if (tn > lo - 1e-9 && tn < hi + 1e-9) t = tn;
        }
        const UnitComplex w = UnitComplex::from_turns(t);
        if (std::abs(lift.map().eval(w.value()) - z.value()) > tol_root) {
            throw BranchMiss("preimages: branch root failed residual check");
        }
        roots.push_back(w);
    }
    return roots;
}

std::vector<UnitComplex> preimages(const BlaschkeProduct& map, const UnitComplex& z,
                                   double tol_root) {
    return preimages(CircleLift(map), z, tol_root);
}

double arc_image_measure(const CircleLift& lift, double t_a, double t_b) {
    if (!(t_a < t_b) || t_b > t_a + 1.0) {
        throw std::invalid_argument("arc_image_measure: need t_a < t_b <= t_a + 1");
    }
    return std::min(1.0, lift(t_b) - lift(t_a));
}

double arc_image_measure(const BlaschkeProduct& map, double t_a, double t_b) {
    return arc_image_measure(CircleLift(map), t_a, t_b);
}

}  // namespace blaschke
