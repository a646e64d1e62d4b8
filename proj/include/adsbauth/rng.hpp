#pragma once

#include <cstdint>

namespace adsbauth {

// Deterministic 64-bit generator (splitmix64). All randomized state in the
// library derives from this so that (k, n, seed) tuples reconstruct
// bit-identical matrices on both ends of the link.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound), unbiased via rejection on the masked draw.
    uint64_t next_below(uint64_t bound) {
        if (bound < 2) return 0;
        uint64_t mask = ~0ULL >> __builtin_clzll(bound - 1 | 1);
        uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

    bool next_bool(double p_true) { return next_double() < p_true; }

private:
    uint64_t state_;
};

// splitmix64 finalizer, used as a mixing function when deriving stream seeds.
inline uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent substream keyed by (seed, stream_id). Distinct stream ids give
// statistically independent sequences; identical pairs replay exactly.
inline SplitMix64 derive_stream(uint64_t seed, uint64_t stream_id) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^ mix64(stream_id ^ 0xD1B54A32D192ED03ULL));
}

} // namespace adsbauth
