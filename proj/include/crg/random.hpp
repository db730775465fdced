#ifndef CRG_RANDOM_HPP
#define CRG_RANDOM_HPP

#include <cstdint>
#include <random>

namespace crg {

// Seeded RNG helpers. We avoid std::uniform_int_distribution because its
// output is implementation-defined; everything below is pinned by the
// standard, so the same seed gives the same bytes on any platform.

inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    // unbiased rejection sampling
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline std::int64_t rng_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// splitmix64; used to derive independent per-trial seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace crg

#endif
