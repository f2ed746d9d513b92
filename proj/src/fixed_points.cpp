#include "blaschke/fixed_points.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace blaschke {

namespace {

// Coefficients (ascending) of z * prod(1 - conj(a_i) z) - rotation * prod(z - a_i).
std::vector<Complex> fixed_point_polynomial(const BlaschkeProduct& map) {
    const auto& zeros = map.zeros();
    std::vector<Complex> denom{Complex(1.0, 0.0)};  // prod (1 - conj(a_i) z)
    std::vector<Complex> numer{Complex(1.0, 0.0)};  // prod (z - a_i)
    for (const DiscPoint& a : zeros) {
        std::vector<Complex> d(denom.size() + 1, Complex(0.0, 0.0));
        std::vector<Complex> n(numer.size() + 1, Complex(0.0, 0.0));
        for (size_t i = 0; i < denom.size(); ++i) {
            d[i] += denom[i];
            d[i + 1] -= std::conj(a.value()) * denom[i];
        }
        for (size_t i = 0; i < numer.size(); ++i) {
            n[i] -= a.value() * numer[i];
            n[i + 1] += numer[i];
        }
        denom = std::move(d);
        numer = std::move(n);
    }
    std::vector<Complex> poly(map.degree() + 2, Complex(0.0, 0.0));
    for (size_t i = 0; i < denom.size(); ++i) poly[i + 1] += denom[i];
    for (size_t i = 0; i < numer.size(); ++i) poly[i] -= map.rotation().value() * numer[i];
    return poly;
}

std::vector<Complex> companion_roots(std::vector<Complex> coeffs) {
    double max_abs = 0.0;
    for (const Complex& c : coeffs) max_abs = std::max(max_abs, std::abs(c));
    if (max_abs == 0.0) return {};
    // Fixed points escaping to infinity (zero at the origin pairs with a
    // fixed point at 1/conj(0)) appear as vanishing leading coefficients.
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-12 * max_abs) coeffs.pop_back();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) {
        comp(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    std::vector<Complex> roots;
    roots.reserve(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

Complex polish_root(const BlaschkeProduct& map, Complex w) {
    for (int it = 0; it < 12; ++it) {
        Complex g, gp;
        try {
            g = map.eval(w) - w;
            gp = map.derivative(w) - 1.0;
        } catch (const PoleHit&) {
            return w;
        }
        if (std::abs(g) < 1e-15) return w;
        if (std::abs(gp) < 1e-10) return w;  // parabolic point, Newton stalls
        const Complex step = g / gp;
        w -= step;
        if (std::abs(step) < 1e-16) return w;
    }
    return w;
}

}  // namespace

std::vector<Complex> fixed_points_all(const BlaschkeProduct& map, double tol_root) {
    std::vector<Complex> roots = companion_roots(fixed_point_polynomial(map));
    std::vector<Complex> out;
    for (Complex w : roots) {
        w = polish_root(map, w);
        double residual;
        try {
            residual = std::abs(map.eval(w) - w);
        } catch (const PoleHit&) {
            continue;  // root collided with a pole; not a fixed point of T
        }
        if (residual > tol_root) {
            throw RootSolveFailure("fixed_points_all: residual " + std::to_string(residual) +
                                   " above tolerance");
        }
        const bool duplicate = std::any_of(out.begin(), out.end(), [&](Complex v) {
            return std::abs(v - w) < 1e-7;
        });
        if (!duplicate) out.push_back(w);
    }
    return out;
}

FixedPointClassification classify_fixed_points(const BlaschkeProduct& map, double tol_indiff) {
    const int n = map.degree();
    const double tol_circle = 1e-7;
    FixedPointClassification result{FixedPointCase::AllOnCircle, {}, std::nullopt, std::nullopt};
    for (Complex w : fixed_points_all(map)) {
        const double r = std::abs(w);
        if (std::abs(r - 1.0) < tol_circle) {
            const UnitComplex u{w};
            result.circle_fixed_points.push_back({u, map.deriv_modulus_on_circle(u)});
        } else if (r < 1.0) {
            result.disc_fixed_point = DiscPoint(w);
            result.disc_multiplier_modulus = std::abs(map.derivative(w));
        }
        // |w| > 1 is the mirror point 1/conj(x) of a disc fixed point; skip.
    }
    std::sort(result.circle_fixed_points.begin(), result.circle_fixed_points.end(),
              [](const CircleFixedPoint& a, const CircleFixedPoint& b) {
                  return a.point.turns() < b.point.turns();
              });

    const auto& cfp = result.circle_fixed_points;
    const bool any_indifferent = std::any_of(cfp.begin(), cfp.end(), [&](const auto& p) {
        return std::abs(p.multiplier_modulus - 1.0) < tol_indiff;
    });
    if (any_indifferent) {
        result.kind = FixedPointCase::IndifferentOnCircle;
        return result;
    }
    const int attracting = static_cast<int>(std::count_if(
        cfp.begin(), cfp.end(), [](const auto& p) { return p.multiplier_modulus < 1.0; }));
    if (static_cast<int>(cfp.size()) == n + 1 && attracting == 1 && !result.disc_fixed_point) {
        result.kind = FixedPointCase::AllOnCircle;
        return result;
    }
    if (static_cast<int>(cfp.size()) == n - 1 && attracting == 0 && result.disc_fixed_point &&
        *result.disc_multiplier_modulus < 1.0) {
        result.kind = FixedPointCase::AttractorInDisc;
        return result;
    }
    throw Degenerate("classify_fixed_points: fixed-point counts match no case (degree " +
                     std::to_string(n) + ")");
}

}  // namespace blaschke
