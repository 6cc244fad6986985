// splitmix64.hpp — the fixed-increment SplitMix64 generator (Steele/Lea/Flood,
// constants as in Vigna's reference code). Chosen for the construction's
// random stream because it is trivially portable: any implementation seeded
// with the same 64-bit value yields the same sequence.
#pragma once

#include <cstdint>

namespace sidon {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t operator()() { return next(); }

private:
    std::uint64_t state_;
};

} // namespace sidon
