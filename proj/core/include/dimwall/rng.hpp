#pragma once

#include <cstdint>

namespace dimwall::rng {

// SplitMix64 finalizer. Stateless, bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based seed splitting: the per-stream seed depends only on
// (master, index), so streams are order-independent and parallelizable.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

// Combine a running hash with one more word.
constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Uniform double in [0, 1) from the top 53 bits of a random word.
// Avoids std::uniform_real_distribution, which is implementation-defined.
constexpr double unit_double(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace dimwall::rng
