#pragma once

#include <cmath>
#include <cstdint>

namespace copydet {

/** Portable seedable PRNG: splitmix64 steps (Steele et al.) with Box-Muller
 *  normals. Fixed algorithm across platforms so generated datasets are
 *  byte-identical for a given seed; recorded in manifests as kRngId.
 *
 *  Substreams are derived by mixing a counter into the seed, giving
 *  independent per-query streams regardless of generation order. */
class Rng {
public:
    static constexpr const char* kRngId = "splitmix64-boxmuller-v1";

    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Independent substream i of a master seed.
    static Rng substream(uint64_t seed, uint64_t i) {
        Rng mixer(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
        uint64_t s = mixer.next_u64();
        return Rng(s ^ 0x5851f42d4c957f2dULL);
    }

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        // multiply-shift; bias is negligible for n << 2^64
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller (one value per pair, cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace copydet
