#pragma once

#include <cstdint>
#include <stdexcept>

namespace bkp {

// SplitMix64. The state advances by the golden-ratio constant and the output
// is the twice-mixed state, so the same seed yields the same stream on every
// platform. Good enough statistically for instance generation and fully
// reproducible, which is the point.
struct RngState {
    std::uint64_t state = 0;

    explicit RngState(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi]. Outputs below 2^64 mod range are rejected
    // so every residue is equally likely.
    std::int64_t next_uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("next_uniform: lo > hi");
        std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        std::uint64_t r = next_u64();
        if (range != 0) {  // range 0 means the full 64-bit span
            std::uint64_t reject_below = (0 - range) % range;
            while (r < reject_below) r = next_u64();
            r %= range;
        }
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r);
    }
};

}  // namespace bkp
