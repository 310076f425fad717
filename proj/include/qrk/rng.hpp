#pragma once

#include <cstdint>
#include <string_view>

namespace qrk {

// Reproducibility contract
// ------------------------
// Every stochastic operation in this library is a pure function of its inputs
// and a 64-bit seed. The generator is SplitMix64 (Steele, Lea & Flood 2014):
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// Derived quantities:
//   * doubles in [0, 1):   (output >> 11) * 2^-53
//   * integers in [0, m):  high 64 bits of the 128-bit product output * m
//
// Seeds for sub-tasks (trajectories, shot batches, measurement settings) are
// derived with derive_seed(master, domain, index), never by reusing a raw
// seed, so independent tasks draw from independent streams.

constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer: bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// FNV-1a 64-bit hash, used to fold domain strings into seed derivation.
constexpr std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed for sub-task `index` of stream `domain` under `master`.
/// derive_seed(m, d, i) = mix64(mix64(m ^ fnv1a64(d)) ^ i)
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view domain,
                                    std::uint64_t index) {
    return mix64(mix64(master ^ fnv1a64(domain)) ^ index);
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kSplitMix64Gamma;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, m) via the multiply-shift reduction
    /// (bias < m / 2^64, far below anything observable here).
    std::uint64_t next_below(std::uint64_t m) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * m) >> 64);
    }

  private:
    std::uint64_t state_;
};

} // namespace qrk
