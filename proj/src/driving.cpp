#include "blaschke/driving.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace blaschke {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

DrivingSystem DrivingSystem::bernoulli(std::vector<double> probabilities) {
    if (probabilities.empty()) {
        throw std::invalid_argument("bernoulli: need at least one symbol");
    }
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) throw std::invalid_argument("bernoulli: probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("bernoulli: probabilities must sum to 1");
    }
    DrivingSystem d;
    d.kind_ = DrivingKind::BernoulliShift;
    d.probabilities_ = std::move(probabilities);
    return d;
}

DrivingSystem DrivingSystem::rotation(double alpha, std::vector<double> thresholds) {
    if (thresholds.size() < 2 || thresholds.front() != 0.0 || thresholds.back() != 1.0) {
        throw std::invalid_argument("rotation: thresholds must run 0 = c_0 < ... < c_k = 1");
    }
    for (size_t i = 1; i < thresholds.size(); ++i) {
        if (!(thresholds[i] > thresholds[i - 1])) {
            throw std::invalid_argument("rotation: thresholds must be strictly increasing");
        }
    }
    DrivingSystem d;
    d.kind_ = DrivingKind::IrrationalRotation;
    d.alpha_ = alpha;
    d.thresholds_ = std::move(thresholds);
    return d;
}

int DrivingSystem::alphabet_size() const {
    return kind_ == DrivingKind::BernoulliShift
               ? static_cast<int>(probabilities_.size())
               : static_cast<int>(thresholds_.size()) - 1;
}

std::vector<double> DrivingSystem::symbol_probabilities() const {
    if (kind_ == DrivingKind::BernoulliShift) return probabilities_;
    std::vector<double> p;
    p.reserve(thresholds_.size() - 1);
    for (size_t i = 1; i < thresholds_.size(); ++i) {
        p.push_back(thresholds_[i] - thresholds_[i - 1]);
    }
    return p;
}

int DrivingSystem::symbol_of_point(double omega) const {
    const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), omega);
    const int j = static_cast<int>(it - thresholds_.begin()) - 1;
    return std::clamp(j, 0, alphabet_size() - 1);
}

MapTable::MapTable(std::vector<BlaschkeProduct> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw std::invalid_argument("MapTable: need at least one map");
}

}  // namespace blaschke
