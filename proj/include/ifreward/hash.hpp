#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ifreward {

// FNV-1a offset basis doubles as the fixed feature-hash seed, so trained
// scorers are portable across platforms and runs.
inline constexpr std::uint64_t kFnvOffsetBasis = 1469598103934665603ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = kFnvOffsetBasis) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0,1) from 53 random bits. The mapping is fixed here
// because std distributions are not bit-portable across implementations.
template <typename Engine>
double uniform_unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Unbiased bounded draw (multiply-shift with rejection), same portability
// rationale as uniform_unit.
template <typename Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    while (true) {
        std::uint64_t x = eng();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo >= bound || lo >= (0 - bound) % bound) {
            return static_cast<std::uint64_t>(m >> 64);
        }
    }
}

// Deterministic Fisher-Yates; element order depends only on the engine state.
template <typename T, typename Engine>
void portable_shuffle(std::vector<T>& items, Engine& eng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(eng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace ifreward
