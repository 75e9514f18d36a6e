#pragma once

#include <cstdint>
#include <random>

namespace graphscan {

using Rng = std::mt19937_64;

// Finalizer step of the splitmix64 generator, used as a 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a stream index
// (snapshot index, replicate index, ...). Two mixing rounds so that nearby
// (seed, stream) pairs land far apart.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(mix64(seed) ^ mix64(stream ^ 0x5851f42d4c957f2dULL));
}

// Uniform double in [0, 1) with 53 random bits. Hand-rolled so the draw
// sequence depends only on the engine, not on the standard library's
// distribution internals.
inline double unit_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace graphscan
