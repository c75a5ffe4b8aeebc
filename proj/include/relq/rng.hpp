#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace relq {

namespace detail {
// splitmix64: used to expand seeds and derive substreams.
inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

/// Deterministic random stream. All sampling in the library goes through this
/// class so that a run is reproducible from its 64-bit seed alone; the
/// uniform-double and bounded-integer draws are implemented by hand rather
/// than with std:: distributions, whose output is not pinned by the standard.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed) {
        std::uint64_t s = seed;
        std::seed_seq seq{detail::splitmix64(s), detail::splitmix64(s), detail::splitmix64(s),
                          detail::splitmix64(s)};
        engine_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Independent stream derived from (seed, index); streams for distinct
    /// indices may be consumed in any order without affecting each other.
    RandomStream substream(std::uint64_t index) const {
        std::uint64_t s = seed_ ^ (0xd1b54a32d192ed03ull * (index + 1));
        return RandomStream(detail::splitmix64(s));
    }

    template <typename T> void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace relq
