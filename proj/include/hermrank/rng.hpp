#pragma once

#include <cstdint>

namespace hermrank {

/// splitmix64: tiny, fast, and fully reproducible across platforms.  The
/// standard <random> distributions are implementation-defined, which would
/// make seeded test fixtures non-portable, so all randomness in the library
/// flows through this generator.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound must be positive.  The modulo bias is
    /// irrelevant at the tiny bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + long(below(std::uint64_t(hi - lo) + 1));
    }

    bool coin() { return (next() & 1u) != 0; }

    /// Uniform double in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-1, 1).
    double symmetric() { return 2.0 * unit() - 1.0; }
};

/// Independent per-index substream of a master seed, so trial i of a batch is
/// reproducible on its own.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
    mix.next();
    return mix;
}

}  // namespace hermrank
