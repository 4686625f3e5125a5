#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace lf {

// std::mt19937 output is fully specified by the standard, but
// std::uniform_int_distribution and std::shuffle are not. Seeded runs must be
// byte-identical across toolchains, so the bounded draw and the shuffle are
// spelled out here.

// Uniform draw from [0, bound) via rejection sampling.
inline std::uint32_t bounded_uint(std::mt19937& rng, std::uint32_t bound) {
    if (bound <= 1) return 0;
    const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() -
                                (std::numeric_limits<std::uint32_t>::max() % bound);
    std::uint32_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Fisher-Yates shuffle with a fixed traversal order.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = bounded_uint(rng, static_cast<std::uint32_t>(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace lf
