#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pollflow {

// Deterministic seed derivation. Every stochastic component draws from an
// engine seeded by mixing the master seed with a fixed set of tags, so runs
// are reproducible and independent streams never alias by accident.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_tag(std::string_view s) {
    // FNV-1a, then one mixing round
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(h);
}

inline std::uint64_t derive_seed(std::uint64_t seed) { return splitmix64(seed); }

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t part, Rest... rest) {
    return derive_seed(splitmix64(seed ^ part), rest...);
}

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t seed, std::string_view part, Rest... rest) {
    return derive_seed(splitmix64(seed ^ hash_tag(part)), rest...);
}

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t seed, int part, Rest... rest) {
    return derive_seed(seed, static_cast<std::uint64_t>(part), rest...);
}

template <typename... Parts>
std::mt19937_64 make_engine(std::uint64_t seed, Parts... parts) {
    return std::mt19937_64(derive_seed(seed, parts...));
}

} // namespace pollflow
