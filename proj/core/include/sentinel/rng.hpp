#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace sentinel {

// Deterministic RNG with all distributions implemented explicitly.
// std::* distributions are implementation-defined, which would break the
// byte-identical replay contract across toolchains; everything here is
// pinned to a fixed algorithm.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Order-independent draws keyed by coordinates (tick, server, ...).
// Used for ground-truth streams that must be identical across schedulers.
inline std::uint64_t hash_mix(std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = 0x51'7c'c1'b7'27'22'0a'95ULL;
    for (std::uint64_t k : keys) {
        std::uint64_t s = h ^ (k + 0x9e3779b97f4a7c15ULL);
        h = splitmix64(s);
    }
    return h;
}

inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;  // [0,1)
}

inline double hash_uniform(std::initializer_list<std::uint64_t> keys) {
    return u64_to_unit(hash_mix(keys));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so nearby seeds decorrelate.
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    double uniform01() { return u64_to_unit(next_u64()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Inclusive bounds.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    double normal() {
        // Box-Muller, no cached spare (keeps the stream position obvious).
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

    double exponential(double rate) {
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        return -std::log(u) / rate;
    }

    // Knuth product method; means used here are small.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean > 60.0) {
            const int n = static_cast<int>(std::lround(normal(mean, std::sqrt(mean))));
            return n < 0 ? 0 : n;
        }
        const double limit = std::exp(-mean);
        double prod = 1.0;
        int k = -1;
        do {
            ++k;
            prod *= uniform01();
        } while (prod > limit);
        return k;
    }

    // Support {1, 2, ...}.
    int geometric(double p) {
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        return 1 + static_cast<int>(std::floor(std::log(u) / std::log1p(-p)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace sentinel
