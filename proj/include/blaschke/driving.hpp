#pragma once

// Driving systems (Bernoulli shift / irrational circle rotation with a
// threshold partition), the symbol-to-map table, and the deterministic
// random stream used to realize paths.
//
// Stream identity: std::mt19937_64 seeded directly; uniforms are
// (x >> 11) * 2^-53; categorical draws by inverse CDF over the given
// probabilities. Identical seeds reproduce identical streams on any
// conforming platform.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "blaschke/blaschke_product.hpp"

namespace blaschke {

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    int categorical(std::span<const double> probabilities) {
        const double u = uniform01();
        double acc = 0.0;
        const int k = static_cast<int>(probabilities.size());
        for (int j = 0; j + 1 < k; ++j) {
            acc += probabilities[static_cast<size_t>(j)];
            if (u < acc) return j;
        }
        return k - 1;
    }

  private:
    std::mt19937_64 engine_;
};

/// Independent child seed for (master, index); splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

enum class DrivingKind { BernoulliShift, IrrationalRotation };

class DrivingSystem {
  public:
    /// i.i.d. symbols with the given probabilities (nonnegative, sum 1).
    static DrivingSystem bernoulli(std::vector<double> probabilities);

    /// omega -> omega + alpha (mod 1); symbol j on [c_j, c_{j+1}) for the
    /// strictly increasing thresholds 0 = c_0 < ... < c_k = 1.
    static DrivingSystem rotation(double alpha, std::vector<double> thresholds);

    DrivingKind kind() const { return kind_; }
    int alphabet_size() const;

    /// Exact stationary symbol probabilities (p itself, or threshold lengths).
    std::vector<double> symbol_probabilities() const;

    const std::vector<double>& probabilities() const { return probabilities_; }
    const std::vector<double>& thresholds() const { return thresholds_; }
    double alpha() const { return alpha_; }

    int symbol_of_point(double omega) const;  // rotation partition lookup

  private:
    DrivingKind kind_ = DrivingKind::BernoulliShift;
    std::vector<double> probabilities_;  // Bernoulli
    double alpha_ = 0.0;                 // rotation
    std::vector<double> thresholds_;     // rotation
};

class MapTable {
  public:
    explicit MapTable(std::vector<BlaschkeProduct> maps);

    int size() const { return static_cast<int>(maps_.size()); }
    const BlaschkeProduct& map(int symbol) const { return maps_[static_cast<size_t>(symbol)]; }
    const std::vector<BlaschkeProduct>& maps() const { return maps_; }

  private:
    std::vector<BlaschkeProduct> maps_;
};

}  // namespace blaschke
