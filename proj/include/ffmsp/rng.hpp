#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ffmsp {

using Rng = std::mt19937_64;

// splitmix64 finalizer; good avalanche, used for seed derivation only.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_bytes(std::uint64_t h, std::string_view s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;  // FNV-1a prime
    }
    return h;
}

inline std::uint64_t hash_u64(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ mix64(v));
}

// Named sub-stream of a master seed. Streams with distinct ids are
// statistically independent, so consuming one does not perturb the others.
inline Rng make_stream(std::uint64_t master, std::uint64_t stream_id) {
    return Rng(mix64(master ^ mix64(stream_id + 0x517cc1b727220a95ULL)));
}

// Seed for one (instance, algorithm, run) cell of a benchmark suite.
inline std::uint64_t derive_run_seed(std::uint64_t master, std::string_view instance_id,
                                     std::string_view algorithm, int run_index) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ mix64(master);
    h = hash_bytes(h, instance_id);
    h = hash_bytes(h, "/");
    h = hash_bytes(h, algorithm);
    return hash_u64(h, static_cast<std::uint64_t>(run_index));
}

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace ffmsp
