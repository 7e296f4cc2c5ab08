#pragma once

#include <cstdint>
#include <random>

namespace microgrid {

// Seeded randomness used by every generator in the project. std::mt19937_64 is
// fully specified by the standard, and the mappings below avoid
// std::uniform_real_distribution (whose output is implementation-defined), so
// identical seeds give identical streams on every platform.

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Derives an independent stream seed from a master seed and a purpose tag
/// (splitmix64 finalizer), so one user-facing seed drives all generators.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace microgrid
