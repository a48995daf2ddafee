#pragma once

#include <cstdint>

namespace apolar {

inline uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Sub-seed for a trial, so trial results are order-independent.
inline uint64_t trial_seed(uint64_t seed, uint64_t trial) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (trial + 1));
    splitmix64_next(s);
    return s;
}

}  // namespace apolar
