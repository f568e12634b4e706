#pragma once

// Seeded, platform-stable generator (splitmix64) for the verification sweeps.
// std::uniform_int_distribution is implementation-defined, so byte-identical
// reruns use this instead.

#include "subres/numbers.hpp"

#include <cstdint>
#include <string_view>

namespace subres {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // in [lo, hi]; spans are tiny compared to 2^64, the modulo bias is irrelevant here
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // numerator in [-num_bound, num_bound], denominator in [1, den_bound]
    Rational rational(long long num_bound, long long den_bound) {
        long long num = range(-num_bound, num_bound);
        long long den = range(1, den_bound);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

// Stable per-case seed: identical regardless of scheduling, so sweeps can fan
// out to a worker pool without changing their results.
inline std::uint64_t case_seed(std::uint64_t seed, std::string_view sweep, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (char ch : sweep) h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ull;
    h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= index + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace subres
