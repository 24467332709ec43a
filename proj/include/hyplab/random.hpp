#pragma once

// Counter-based random streams.
//
// Every draw is a pure function of (seed, stream, counter): the SplitMix64
// finalizer applied to a keyed counter. Independent trials take their own
// stream index so results never depend on evaluation order.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hyplab/dmodule.hpp"
#include "hyplab/dop.hpp"
#include "hyplab/hyperscalar.hpp"

namespace hyplab {

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next_u64() noexcept { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; both halves are used.
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

Complex random_complex(CounterRng& rng);
Bicomplex random_bicomplex(CounterRng& rng);
/// Entries with independent standard normal real and imaginary parts.
BCVector random_vector(CounterRng& rng, std::size_t dim);
BCMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols);
/// Both components uniform on the unit sphere, so ||x||_D = 1.
BCVector random_unit_vector(CounterRng& rng, std::size_t dim);

}  // namespace hyplab
