#pragma once

#include <cstdint>
#include <string_view>

namespace deltacolor {

// Counter-based deterministic randomness. Every draw is a pure function of
// (seed, phase tag, round, vertex id), so per-vertex decisions can be made in
// any order (or concurrently) without a shared stream.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_tag(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t tag,
                            std::uint64_t round, std::uint64_t vid) {
    std::uint64_t x = splitmix64(seed ^ splitmix64(tag));
    x = splitmix64(x ^ splitmix64(round + 0x51ed2701));
    return splitmix64(x ^ splitmix64(vid + 0xabcd1234));
}

inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::uint64_t seed, std::uint64_t tag, std::uint64_t round,
                      std::uint64_t vid, double p) {
    return to_unit(derive(seed, tag, round, vid)) < p;
}

// Uniform in [0, n). Modulo bias is irrelevant at the sizes we draw.
inline std::uint64_t below(std::uint64_t seed, std::uint64_t tag,
                           std::uint64_t round, std::uint64_t vid,
                           std::uint64_t n) {
    return n == 0 ? 0 : derive(seed, tag, round, vid) % n;
}

}  // namespace rng
}  // namespace deltacolor
