#pragma once

#include <cstdint>

#include "laundry/braid.hpp"

namespace laundry {

// splitmix64: tiny, seed-stable across platforms (std distributions are not).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }
    int sign() { return below(2) ? 1 : -1; }
};

inline BraidWord random_word(Rng& rng, int max_strands = 6, int max_crossings = 12) {
    int n = 1 + (int)rng.below(max_strands);
    BraidWord w{n, {}};
    if (n == 1) return w;
    int c = (int)rng.below(max_crossings + 1);
    for (int i = 0; i < c; ++i)
        w.letters.push_back({1 + (int)rng.below(n - 1), rng.sign()});
    return w;
}

}  // namespace laundry
