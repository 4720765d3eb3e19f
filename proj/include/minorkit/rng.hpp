#pragma once

/**
 * @file rng.hpp
 * @brief Deterministic seeded randomness.
 *
 * Every random stream is a std::mt19937_64 whose seed is derived from a master
 * seed and a stable stream index by two rounds of the SplitMix64 finalizer.
 * Streams for different indices are independent of execution order, so a
 * batch of claims produces the same numbers whether it runs serially or not.
 */

#include <cstdint>
#include <random>

namespace minorkit {

/// Seed used when the caller does not pass one; bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0x4A6F686E736F6E03ULL;

/// SplitMix64 output function applied to x.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of stream `index` under `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0xD1B54A32D192ED03ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng stream(std::uint64_t master, std::uint64_t index) { return Rng(derive_seed(master, index)); }

    std::uint64_t next_u64() { return engine_(); }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    double normal() { return normal_(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace minorkit
