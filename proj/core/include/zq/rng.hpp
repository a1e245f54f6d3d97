#pragma once

//
// Deterministic 64-bit generator for reproducible experiments.
//
// SplitMix64: the state advances by the fixed increment 0x9E3779B97F4A7C15
// per draw and the output is a bijective mix of the state. Any
// implementation language reproduces the sequence from the same seed.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// uniform_below(n) uses rejection on the top of the 64-bit range so every
// residue class is exactly equally likely: draws r are rejected while
// r >= floor(2^64 / n) * n, then r % n is returned.
//

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "zq/error.hpp"

namespace zq {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw InvalidRange("uniform_below(0)");
        const std::uint64_t rem = (~std::uint64_t{0} % n + 1) % n; // 2^64 mod n
        if (rem == 0) return next() % n;
        const std::uint64_t cutoff = 0 - rem; // floor(2^64/n)*n
        std::uint64_t r;
        do {
            r = next();
        } while (r >= cutoff);
        return r % n;
    }

private:
    std::uint64_t state_;
};

// k distinct values from [0, n), sorted ascending: repeated uniform draws,
// duplicates skipped. Deterministic in (seed, n, k).
inline std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::size_t k,
                                                  std::uint64_t seed) {
    if (k > n) throw InvalidRange("sample_distinct: k > n");
    SplitMix64 gen(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(k * 2);
    while (seen.size() < k) seen.insert(gen.uniform_below(n));
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zq
