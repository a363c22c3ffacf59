#pragma once

#include <cmath>
#include <cstdint>

namespace eigenpert {

// SplitMix64: a counter-based 64-bit generator (Steele, Lea, Flood 2014).
// Output i is a bijective mix of seed + i*gamma, so streams are pure
// functions of (seed, counter) — identical on every platform and thread
// layout. Stream splitting: replicate r uses seed base + r.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with 53 significant bits; never returns exactly 0
    // (keeps log() finite in Box-Muller).
    double next_unit() {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    // Standard normal via Box-Muller; caches the second variate.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // +1 or -1, equiprobable.
    double next_rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

    // sqrt(3) * Uniform(-1, 1): symmetric, variance 1, bounded.
    double next_uniform_scaled() {
        return 1.7320508075688772 * (2.0 * next_unit() - 1.0);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace eigenpert
