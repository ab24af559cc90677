#pragma once

#include <cstdint>

namespace epiprob {

// splitmix64: the standard 64-bit mix-and-increment generator. Used for all
// pseudo-randomness in this library (simulation run sampling, generated test
// systems). Deterministic across platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound), bound > 0, by rejection.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = bound * (UINT64_MAX / bound);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

// An independent stream per trial index: sampling trial t never consumes
// randomness from any other trial, so any partition of trials across shards
// reproduces the unsharded results exactly.
inline SplitMix64 trial_stream(uint64_t seed, uint64_t trial) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
}

}  // namespace epiprob
