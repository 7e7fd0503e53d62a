#ifndef HETERORANK_RNG_HPP
#define HETERORANK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace hr {

// One splitmix64 step. Used to derive independent sub-seeds from a master
// seed so that every component draws from its own stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive a sub-seed from (seed, tag). Same inputs give the same sub-seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + tag * 0x9e3779b97f4a7c15ULL);
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

// Deterministic RNG wrapper. All randomized operations in the library draw
// through this class only, never through std distributions, so outputs are
// reproducible for a fixed seed independent of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n). n = 0 returns 0.
    std::uint32_t below(std::uint32_t n) {
        if (n == 0) return 0;
        std::uint64_t threshold = (~std::uint64_t{0} - n + 1) % n; // rejection
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return static_cast<std::uint32_t>(r % n);
        }
    }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Poisson via inversion for small means, normal-rejection not needed at
    // the vote counts used here.
    std::uint32_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 30.0) {
            double l = std::exp(-mean);
            std::uint32_t k = 0;
            double p = 1.0;
            do {
                ++k;
                p *= unit();
            } while (p > l);
            return k - 1;
        }
        // Split to keep the inversion numerically safe for larger means.
        std::uint32_t half = poisson(mean / 2.0);
        return half + poisson(mean - mean / 2.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    Rng fork(std::uint64_t tag) {
        return Rng(derive_seed(eng_(), tag));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hr

#endif
