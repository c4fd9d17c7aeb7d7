// Seeded RNG substreams. Every source of randomness in a run derives from one
// user seed plus a stream name, so reruns are bit-for-bit reproducible.
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace probsent {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 sub_rng(uint64_t seed, std::string_view stream) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a over the stream name
    for (char c : stream) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return std::mt19937_64(splitmix64(seed ^ h));
}

}  // namespace probsent
