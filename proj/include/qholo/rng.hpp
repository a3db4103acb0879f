#ifndef QHOLO_RNG_HPP
#define QHOLO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "qholo/scalar.hpp"

namespace qholo {

// splitmix64; used to derive independent per-sample streams from one master
// seed so that Monte Carlo runs are reproducible regardless of worker count.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic RNG wrapper.  Uniform doubles and Gaussians are built from
/// raw mt19937_64 output (not std::*_distribution) so streams are identical
/// across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    double uniform() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    int sign(double prob_plus) { return uniform() < prob_plus ? +1 : -1; }

    double gaussian() {  // Box-Muller, one value per call pair
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Complex cgaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qholo

#endif
