#include "blaschke/blaschke_product.hpp"

#include <cmath>

namespace blaschke {

UnitComplex::UnitComplex(Complex z) {
    const double r = std::abs(z);
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("UnitComplex: cannot normalize zero or non-finite value");
    }
    value_ = z / r;
}

UnitComplex UnitComplex::from_turns(double t) {
    UnitComplex u;
    u.value_ = Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
    return u;
}

double UnitComplex::turns() const {
    double t = std::arg(value_) / kTwoPi;
    if (t < 0.0) t += 1.0;
    if (t >= 1.0) t -= 1.0;
    return t;
}

DiscPoint::DiscPoint(Complex z) {
    if (!(std::abs(z) < 1.0 - kBoundaryEps)) {
        throw std::domain_error("DiscPoint: |z| must be < 1 - 1e-9");
    }
    value_ = z;
}

BlaschkeProduct::BlaschkeProduct(UnitComplex rotation, std::vector<DiscPoint> zeros)
    : rotation_(rotation), zeros_(std::move(zeros)) {
    if (zeros_.empty()) {
        throw std::domain_error("BlaschkeProduct: degree must be >= 1");
    }
}

Complex BlaschkeProduct::eval(Complex z) const {
    Complex w = rotation_.value();
    for (const DiscPoint& a : zeros_) {
        const Complex av = a.value();
        const Complex den = 1.0 - std::conj(av) * z;
        if (std::abs(den) < kPoleEps) {
            throw PoleHit("BlaschkeProduct::eval: z too close to pole 1/conj(a)");
        }
        w *= (z - av) / den;
    }
    return w;
}

namespace {

// Factor g(z) = (z - a)/(1 - conj(a) z) and its first two derivatives.
inline Complex factor(Complex z, Complex a, Complex den) { return (z - a) / den; }

inline Complex factor_deriv(Complex z, Complex a, Complex den) {
    const double one_minus = 1.0 - std::norm(a);
    (void)z;
    return one_minus / (den * den);
}

}  // namespace

Complex BlaschkeProduct::derivative(Complex z) const {
    const int n = degree();
    bool near_zero = false;
    for (const DiscPoint& a : zeros_) {
        if (std::abs(z - a.value()) < 1e-8) {
            near_zero = true;
            break;
        }
    }
    if (!near_zero) {
        // T' = T * sum_i [ 1/(z - a_i) + conj(a_i)/(1 - conj(a_i) z) ]
        Complex logd(0.0, 0.0);
        for (const DiscPoint& a : zeros_) {
            const Complex av = a.value();
            const Complex den = 1.0 - std::conj(av) * z;
            if (std::abs(den) < kPoleEps) throw PoleHit("derivative: z too close to pole");
            logd += 1.0 / (z - av) + std::conj(av) / den;
        }
        return eval(z) * logd;
    }
    // Sum-of-products form, exact when z coincides with one or more zeros.
    Complex sum(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
        Complex term = rotation_.value();
        for (int i = 0; i < n; ++i) {
            const Complex av = zeros_[static_cast<size_t>(i)].value();
            const Complex den = 1.0 - std::conj(av) * z;
            if (std::abs(den) < kPoleEps) throw PoleHit("derivative: z too close to pole");
            term *= (i == j) ? factor_deriv(z, av, den) : factor(z, av, den);
        }
        sum += term;
    }
    return sum;
}

Complex BlaschkeProduct::second_derivative(Complex z) const {
    // T'' = T * (L^2 + L') with L the logarithmic derivative; valid away from zeros.
    Complex L(0.0, 0.0), Lp(0.0, 0.0);
    for (const DiscPoint& a : zeros_) {
        const Complex av = a.value();
        const Complex num = z - av;
        const Complex den = 1.0 - std::conj(av) * z;
        if (std::abs(den) < kPoleEps) throw PoleHit("second_derivative: z too close to pole");
        if (std::abs(num) < 1e-12) {
            throw std::domain_error("second_derivative: z coincides with a zero");
        }
        L += 1.0 / num + std::conj(av) / den;
        Lp += -1.0 / (num * num) + std::conj(av) * std::conj(av) / (den * den);
    }
    return eval(z) * (L * L + Lp);
}

double BlaschkeProduct::deriv_modulus_on_circle(const UnitComplex& z) const {
    const Complex zv = z.value();
    double s = 0.0;
    for (const DiscPoint& a : zeros_) {
        s += (1.0 - std::norm(a.value())) / std::norm(zv - a.value());
    }
    return s;
}

BlaschkeProduct BlaschkeProduct::rotated(const UnitComplex& theta) const {
    return BlaschkeProduct(UnitComplex(theta.value() * rotation_.value()), zeros_);
}

double BlaschkeProduct::sup_deriv_bound() const {
    double s = 0.0;
    for (const DiscPoint& a : zeros_) {
        const double r = a.abs();
        s += (1.0 + r) / (1.0 - r);
    }
    return s;
}

BlaschkeProduct BlaschkeProduct::power_map(int n) {
    return BlaschkeProduct(UnitComplex(Complex(1.0, 0.0)),
                           std::vector<DiscPoint>(static_cast<size_t>(n), DiscPoint()));
}

}  // namespace blaschke
