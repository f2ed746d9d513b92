#include "blaschke/cocycle_path.hpp"

#include <cmath>

namespace blaschke {

CocyclePath::CocyclePath(DrivingSystem driving, MapTable table, std::uint64_t seed, int n_back,
                         int n_fwd, UnitComplex theta)
    : driving_(std::make_shared<const DrivingSystem>(std::move(driving))),
      table_(std::make_shared<const MapTable>(std::move(table))),
      origin_(n_back),
      theta_(theta),
      seed_(seed) {
    if (n_back < 0 || n_fwd < 0) {
        throw std::invalid_argument("CocyclePath: window lengths must be nonnegative");
    }
    const int len = n_back + n_fwd + 1;
    std::vector<int> symbols(static_cast<size_t>(len));
    RandomStream stream(seed);
    const int nsym = driving_->alphabet_size();
    if (table_->size() < nsym) {
        throw std::invalid_argument("CocyclePath: map table smaller than the alphabet");
    }
    if (driving_->kind() == DrivingKind::BernoulliShift) {
        const auto& p = driving_->probabilities();
        for (int i = 0; i < len; ++i) {
            symbols[static_cast<size_t>(i)] = stream.categorical(p);
        }
    } else {
        const double omega0 = stream.uniform01();
        const double alpha = driving_->alpha();
        for (int i = 0; i < len; ++i) {
            const int j = i - n_back;  // time index
            double omega = std::fmod(omega0 + j * alpha, 1.0);
            if (omega < 0.0) omega += 1.0;
            symbols[static_cast<size_t>(i)] = driving_->symbol_of_point(omega);
        }
    }
    symbols_ = std::make_shared<const std::vector<int>>(std::move(symbols));
}

int CocyclePath::symbol(int j) const {
    const int idx = origin_ + j;
    if (idx < 0 || idx >= static_cast<int>(symbols_->size())) {
        throw std::out_of_range("CocyclePath::symbol: index outside realized window");
    }
    return (*symbols_)[static_cast<size_t>(idx)];
}

CocyclePath CocyclePath::shifted(int offset) const {
    const int new_origin = origin_ + offset;
    if (new_origin < 0 || new_origin >= static_cast<int>(symbols_->size())) {
        throw std::out_of_range("CocyclePath::shifted: offset outside realized window");
    }
    CocyclePath p;
    p.driving_ = driving_;
    p.table_ = table_;
    p.symbols_ = symbols_;
    p.origin_ = new_origin;
    p.theta_ = theta_;
    p.seed_ = seed_;
    return p;
}

Complex CocyclePath::forward_compose(int j, int n, Complex z) const {
    if (n < 0) throw std::invalid_argument("forward_compose: length must be nonnegative");
    const Complex th = theta_.value();
    for (int k = 0; k < n; ++k) {
        z = th * map_at(j + k).eval(z);
    }
    return z;
}

Complex CocyclePath::backward_compose(int n, Complex z) const {
    if (n < 0) throw std::invalid_argument("backward_compose: length must be nonnegative");
    const Complex th = theta_.value();
    for (int k = n; k >= 1; --k) {
        z = th * map_at(-k).eval(z);
    }
    return z;
}

double uniform_contraction_radius(const MapTable& table, double R, int grid) {
    if (!(R > 0.0 && R < 1.0)) {
        throw std::invalid_argument("uniform_contraction_radius: need 0 < R < 1");
    }
    double worst = 0.0;
    for (const BlaschkeProduct& map : table.maps()) {
        for (int j = 0; j < grid; ++j) {
            const double t = kTwoPi * j / grid;
            const Complex z = R * Complex(std::cos(t), std::sin(t));
            worst = std::max(worst, std::abs(map.eval(z)));
        }
    }
    return worst;
}

}  // namespace blaschke
