#pragma once

#include <cstdint>

namespace ordconic {

/// SplitMix64. Small, fast, and with a sequence that is pinned by this
/// header rather than by the standard library, so seeded runs replay
/// byte-identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; bias is irrelevant for our ranges.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

} // namespace ordconic
