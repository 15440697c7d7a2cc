// Deterministic pseudo-random source used by randomized searches and corpora.
// Seeds are part of every randomized API so results are reproducible.
#pragma once

#include <cstdint>

namespace mfwild {

/// splitmix64: small, fast, and stable across platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n); returns 0 for n == 0.
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform value in [lo, hi], inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Independent child stream; used to decouple sub-corpora.
    SplitMix64 fork(uint64_t salt) {
        return SplitMix64(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
    }
};

}  // namespace mfwild
