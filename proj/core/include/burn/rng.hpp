#pragma once

#include <cstdint>
#include <random>

namespace burn::rng {

/// splitmix64 finalizer; combines two words into a well-mixed seed.
inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 0x632be59bd9b4e019ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

/// Uniform double in [0, 1). std::uniform_real_distribution is not pinned
/// across standard library implementations, so the conversion is done here.
inline double unit_double(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). bound must be positive.
inline int below(std::mt19937_64& gen, int bound) {
    return static_cast<int>(gen() % static_cast<std::uint64_t>(bound));
}

}  // namespace burn::rng
